//! The norm-trace curve Y_r: rational points, genus, lines of the projective
//! plane, tangent lines, and local power-series expansions at affine points.
//!
//! The affine equation is N(x) = Tr(y). The only point at infinity, (0:1:0),
//! is also the only singular point; every affine point is smooth with
//! x - x0 as a local parameter (the y-derivative of the equation is -1).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Felt, Field};

/// A rational point of Y_r, or more generally of the projective plane
/// restricted to the curve's two charts of interest.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Point {
    Affine(Felt, Felt),
    Infinity,
}

impl Point {
    pub const ORIGIN: Point = Point::Affine(Felt::ZERO, Felt::ZERO);

    pub fn is_affine(self) -> bool {
        matches!(self, Point::Affine(_, _))
    }

    /// Homogeneous coordinates (x : y : z).
    pub fn homogeneous(self) -> (Felt, Felt, Felt) {
        match self {
            Point::Affine(x, y) => (x, y, Felt::ONE),
            Point::Infinity => (Felt::ZERO, Felt::ONE, Felt::ZERO),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Affine(x, y) => write!(f, "({}, {})", x, y),
            Point::Infinity => write!(f, "P_inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum LineClass {
    Vertical,
    Horizontal,
    AtInfinity,
    Slanted,
}

/// A projective line a*x + b*y + c*z = 0, normalized so the first nonzero
/// coefficient is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjLine {
    pub a: Felt,
    pub b: Felt,
    pub c: Felt,
    pub class: LineClass,
}

impl ProjLine {
    pub fn new(field: &Field, a: Felt, b: Felt, c: Felt) -> ProjLine {
        assert!(
            !(a.is_zero() && b.is_zero() && c.is_zero()),
            "zero coefficient triple is not a line"
        );
        let lead = if !a.is_zero() {
            a
        } else if !b.is_zero() {
            b
        } else {
            c
        };
        let s = field.inv(lead);
        let (a, b, c) = (field.mul(s, a), field.mul(s, b), field.mul(s, c));
        let class = if a.is_zero() && b.is_zero() {
            LineClass::AtInfinity
        } else if b.is_zero() {
            LineClass::Vertical
        } else if a.is_zero() {
            LineClass::Horizontal
        } else {
            LineClass::Slanted
        };
        ProjLine { a, b, c, class }
    }

    /// The vertical line x = beta.
    pub fn vertical(field: &Field, beta: Felt) -> ProjLine {
        ProjLine::new(field, Felt::ONE, Felt::ZERO, field.neg(beta))
    }

    /// The horizontal line y = alpha.
    pub fn horizontal(field: &Field, alpha: Felt) -> ProjLine {
        ProjLine::new(field, Felt::ZERO, Felt::ONE, field.neg(alpha))
    }

    pub fn contains(&self, field: &Field, p: Point) -> bool {
        let (x, y, z) = p.homogeneous();
        let v = field.add(
            field.add(field.mul(self.a, x), field.mul(self.b, y)),
            field.mul(self.c, z),
        );
        v.is_zero()
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}x + {}y + {}z = 0; {:?}]",
            self.a, self.b, self.c, self.class
        )
    }
}

/// All lines of P^2 over the field, verticals first, then horizontals, the
/// line at infinity, and finally the slanted lines.
pub fn lines_of_p2(field: &Field) -> Vec<ProjLine> {
    let mut out = Vec::new();
    for beta in field.elements() {
        out.push(ProjLine::vertical(field, beta));
    }
    for alpha in field.elements() {
        out.push(ProjLine::horizontal(field, alpha));
    }
    out.push(ProjLine::new(field, Felt::ZERO, Felt::ZERO, Felt::ONE));
    for m in field.elements().skip(1) {
        for k in field.elements() {
            // y = m x + k  <=>  m x - y + k = 0
            out.push(ProjLine::new(field, m, field.neg(Felt::ONE), k));
        }
    }
    out
}

/// The norm-trace curve over F_{q^r} with its ordered affine point list.
pub struct Curve {
    pub field: Arc<Field>,
    pub genus: u64,
    /// Affine rational points ordered by (index of x, index of y).
    pub affine_points: Vec<Point>,
}

impl Curve {
    pub fn build(field: Arc<Field>) -> Result<Curve> {
        let genus = (field.q.pow(field.r - 1) - 1) * (field.c - 1) / 2;
        let mut affine_points = Vec::with_capacity((field.order * field.q.pow(field.r - 1)) as usize);
        for x in field.elements() {
            let nx = field.norm_to_base(x);
            for y in field.trace_fiber(nx)? {
                affine_points.push(Point::Affine(x, y));
            }
        }
        debug_assert_eq!(
            affine_points.len() as u64,
            field.q.pow(2 * field.r - 1)
        );
        Ok(Curve {
            field,
            genus,
            affine_points,
        })
    }

    pub fn q(&self) -> u64 {
        self.field.q
    }

    pub fn r(&self) -> u32 {
        self.field.r
    }

    /// The curve degree c = (q^r - 1)/(q - 1).
    pub fn c(&self) -> u64 {
        self.field.c
    }

    pub fn on_curve(&self, p: Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => self.field.norm_to_base(x) == self.field.trace_to_base(y),
        }
    }

    /// Tangent line at a smooth (affine) point. Never vertical: the partial
    /// derivative of the equation with respect to y is identically -1.
    pub fn tangent_line(&self, p: Point) -> Result<ProjLine> {
        let (x0, y0) = match p {
            Point::Affine(x, y) => (x, y),
            Point::Infinity => return Err(Error::PointAtInfinity),
        };
        let f = &*self.field;
        // F = x^c - Tr(y); F_x = c * x^(c-1), F_y = -1
        let cbar = f.from_prime_residue(f.c);
        let a = f.mul(cbar, f.pow(x0, f.c - 1));
        let b = f.neg(Felt::ONE);
        let c = f.neg(f.add(f.mul(a, x0), f.mul(b, y0)));
        Ok(ProjLine::new(f, a, b, c))
    }

    pub fn line_through(&self, p: Point, q: Point) -> Result<ProjLine> {
        if p == q {
            return Err(Error::IdenticalPoints);
        }
        let f = &*self.field;
        let (x1, y1, z1) = p.homogeneous();
        let (x2, y2, z2) = q.homogeneous();
        let a = f.sub(f.mul(y1, z2), f.mul(z1, y2));
        let b = f.sub(f.mul(z1, x2), f.mul(x1, z2));
        let c = f.sub(f.mul(x1, y2), f.mul(y1, x2));
        Ok(ProjLine::new(f, a, b, c))
    }

    /// The unique line through all points of `s`, or None if they are not
    /// collinear (or contain fewer than two distinct points).
    pub fn collinear(&self, s: &[Point]) -> Option<ProjLine> {
        let first = *s.first()?;
        let other = s.iter().copied().find(|&p| p != first)?;
        let line = self.line_through(first, other).ok()?;
        if s.iter().all(|&p| line.contains(&self.field, p)) {
            Some(line)
        } else {
            None
        }
    }

    /// All affine rational points of the curve on the line.
    pub fn line_curve_points(&self, line: &ProjLine) -> Vec<Point> {
        self.affine_points
            .iter()
            .copied()
            .filter(|&p| line.contains(&self.field, p))
            .collect()
    }

    /// Truncated series y(t) with y(0) = y0 and Tr(y(t)) = N(x0 + t),
    /// solved coefficient by coefficient (the y^1 term of Tr has coefficient 1).
    pub fn local_expansion(&self, p: Point, k: usize) -> Result<PowerSeries> {
        let (x0, y0) = match p {
            Point::Affine(x, y) => (x, y),
            Point::Infinity => return Err(Error::PointAtInfinity),
        };
        let f = &*self.field;
        // rhs = (x0 + t)^c truncated to k terms
        let base = PowerSeries::from_coeffs(self.field.clone(), {
            let mut v = vec![Felt::ZERO; k];
            if k > 0 {
                v[0] = x0;
            }
            if k > 1 {
                v[1] = Felt::ONE;
            }
            v
        });
        let rhs = base.pow(f.c);
        let mut ys = vec![Felt::ZERO; k];
        if k > 0 {
            ys[0] = y0;
        }
        for m in 1..k {
            let mut v = rhs.coeffs[m];
            let mut qe = f.q;
            for _ in 1..f.r {
                if qe as usize <= m && m % qe as usize == 0 {
                    v = f.sub(v, f.pow(ys[m / qe as usize], qe));
                }
                qe = match qe.checked_mul(f.q) {
                    Some(x) => x,
                    None => break,
                };
            }
            ys[m] = v;
        }
        Ok(PowerSeries::from_coeffs(self.field.clone(), ys))
    }

    /// Order of vanishing at an affine point of a bivariate polynomial,
    /// given as sparse (i, j, coefficient) terms in x and y.
    pub fn vanishing_order(
        &self,
        terms: &[(u32, u32, Felt)],
        p: Point,
        cap: usize,
    ) -> Result<VanishingOrder> {
        if terms.iter().all(|&(_, _, c)| c.is_zero()) {
            return Err(Error::ZeroFunction);
        }
        let (x0, _) = match p {
            Point::Affine(x, y) => (x, y),
            Point::Infinity => return Err(Error::PointAtInfinity),
        };
        let xs = PowerSeries::from_coeffs(self.field.clone(), {
            let mut v = vec![Felt::ZERO; cap];
            if cap > 0 {
                v[0] = x0;
            }
            if cap > 1 {
                v[1] = Felt::ONE;
            }
            v
        });
        let ys = self.local_expansion(p, cap)?;
        let mut acc = PowerSeries::zero(self.field.clone(), cap);
        for &(i, j, coef) in terms {
            if coef.is_zero() {
                continue;
            }
            let term = xs.pow(i as u64).mul(&ys.pow(j as u64)).scale(coef);
            acc = acc.add(&term);
        }
        Ok(match acc.order() {
            Some(o) => VanishingOrder::Exact(o),
            None => VanishingOrder::AtLeast(cap),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VanishingOrder {
    Exact(usize),
    AtLeast(usize),
}

/// Truncated power series in the local parameter t; arithmetic truncates to
/// the shorter operand.
#[derive(Clone)]
pub struct PowerSeries {
    pub field: Arc<Field>,
    pub coeffs: Vec<Felt>,
}

impl PowerSeries {
    pub fn zero(field: Arc<Field>, k: usize) -> PowerSeries {
        PowerSeries {
            field,
            coeffs: vec![Felt::ZERO; k],
        }
    }

    pub fn from_coeffs(field: Arc<Field>, coeffs: Vec<Felt>) -> PowerSeries {
        PowerSeries { field, coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let k = self.coeffs.len().min(other.coeffs.len());
        let f = &*self.field;
        let coeffs = (0..k)
            .map(|i| f.add(self.coeffs[i], other.coeffs[i]))
            .collect();
        PowerSeries::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn scale(&self, s: Felt) -> PowerSeries {
        let f = &*self.field;
        let coeffs = self.coeffs.iter().map(|&c| f.mul(s, c)).collect();
        PowerSeries::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let k = self.coeffs.len().min(other.coeffs.len());
        let f = &*self.field;
        let mut coeffs = vec![Felt::ZERO; k];
        for (i, &a) in self.coeffs.iter().enumerate().take(k) {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(k - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        PowerSeries::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn pow(&self, mut k: u64) -> PowerSeries {
        let mut acc = PowerSeries::zero(self.field.clone(), self.coeffs.len());
        if !acc.coeffs.is_empty() {
            acc.coeffs[0] = Felt::ONE;
        }
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Index of the first nonzero coefficient, if any below the truncation.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: u64, r: u32) -> Curve {
        let f = Arc::new(Field::build(p, 1, r).unwrap());
        Curve::build(f).unwrap()
    }

    #[test]
    fn point_counts() {
        let c = curve(2, 3);
        assert_eq!(c.affine_points.len(), 32);
        assert_eq!(c.genus, 9);
        let c = curve(3, 3);
        assert_eq!(c.affine_points.len(), 243);
        assert_eq!(c.genus, 48);
    }

    #[test]
    fn points_ordered_and_on_curve() {
        let c = curve(3, 3);
        let mut sorted = c.affine_points.clone();
        sorted.sort();
        assert_eq!(sorted, c.affine_points);
        for &p in &c.affine_points {
            assert!(c.on_curve(p));
        }
    }

    #[test]
    fn on_curve_examples() {
        let c = curve(2, 3);
        assert!(c.on_curve(Point::ORIGIN));
        assert!(c.on_curve(Point::Infinity));
        // (1, 0): N(1) = 1 != Tr(0) = 0
        assert!(!c.on_curve(Point::Affine(Felt::ONE, Felt::ZERO)));
    }

    #[test]
    fn tangent_at_origin_is_y_zero() {
        for c in [curve(2, 3), curve(3, 3)] {
            let t = c.tangent_line(Point::ORIGIN).unwrap();
            assert_eq!(t.class, LineClass::Horizontal);
            assert!(t.c.is_zero());
            // meets the curve's rational points only at the origin
            assert_eq!(c.line_curve_points(&t), vec![Point::ORIGIN]);
        }
    }

    #[test]
    fn no_vertical_tangents() {
        let c = curve(2, 3);
        for &p in &c.affine_points {
            let t = c.tangent_line(p).unwrap();
            assert_ne!(t.class, LineClass::Vertical);
        }
        assert!(c.tangent_line(Point::Infinity).is_err());
    }

    #[test]
    fn vertical_line_fibers() {
        for c in [curve(2, 3), curve(3, 3)] {
            let expect = c.q().pow(c.r() - 1) as usize;
            for beta in c.field.elements() {
                let l = ProjLine::vertical(&c.field, beta);
                assert_eq!(c.line_curve_points(&l).len(), expect);
            }
        }
    }

    #[test]
    fn horizontal_line_law() {
        for c in [curve(2, 3), curve(3, 3)] {
            for alpha in c.field.elements() {
                let l = ProjLine::horizontal(&c.field, alpha);
                let n = c.line_curve_points(&l).len();
                if c.field.trace_to_base(alpha).is_zero() {
                    assert_eq!(n, 1);
                } else {
                    assert_eq!(n, c.c() as usize);
                }
            }
        }
    }

    #[test]
    fn line_through_and_collinear() {
        let c = curve(2, 3);
        let p = Point::Affine(Felt::ZERO, Felt::ZERO);
        let q = Point::Affine(Felt::ZERO, Felt(2));
        let l = c.line_through(p, q).unwrap();
        assert_eq!(l.class, LineClass::Vertical);
        assert!(c.line_through(p, p).is_err());
        // three points with distinct x cannot be on a vertical line
        let s = [
            Point::Affine(Felt::ZERO, Felt::ZERO),
            Point::Affine(Felt::ZERO, Felt(2)),
            Point::Affine(Felt(3), Felt::ZERO),
        ];
        assert!(c.collinear(&s).is_none());
        // any two distinct points span some line
        for &a in c.affine_points.iter().take(6) {
            for &b in c.affine_points.iter().take(6) {
                if a != b {
                    assert!(c.collinear(&[a, b]).is_some());
                }
            }
        }
    }

    #[test]
    fn expansion_at_origin_has_order_c() {
        for c in [curve(2, 3), curve(3, 3)] {
            let k = c.c() as usize + 2;
            let s = c.local_expansion(Point::ORIGIN, k).unwrap();
            assert_eq!(s.order(), Some(c.c() as usize));
        }
    }

    #[test]
    fn expansion_consistency() {
        let c = curve(3, 3);
        let k = 16;
        for &p in c.affine_points.iter().step_by(17) {
            let (x0, y0) = match p {
                Point::Affine(x, y) => (x, y),
                _ => unreachable!(),
            };
            let ys = c.local_expansion(p, k).unwrap();
            assert_eq!(ys.coeffs[0], y0);
            // Tr(y(t)) - N(x0 + t) must vanish mod t^k
            let f = &*c.field;
            let xs = PowerSeries::from_coeffs(c.field.clone(), {
                let mut v = vec![Felt::ZERO; k];
                v[0] = x0;
                v[1] = Felt::ONE;
                v
            });
            let rhs = xs.pow(f.c);
            let mut lhs = PowerSeries::zero(c.field.clone(), k);
            for i in 0..f.r {
                let qe = f.q.pow(i);
                // (y(t))^(q^i): coefficient m*q^i is ys[m]^(q^i)
                let mut t = vec![Felt::ZERO; k];
                for (m, &cm) in ys.coeffs.iter().enumerate() {
                    let pos = m.checked_mul(qe as usize);
                    if let Some(pos) = pos.filter(|&x| x < k) {
                        t[pos] = f.add(t[pos], f.pow(cm, qe));
                    }
                }
                lhs = lhs.add(&PowerSeries::from_coeffs(c.field.clone(), t));
            }
            let diff = lhs.add(&rhs.scale(f.neg(Felt::ONE)));
            assert_eq!(diff.order(), None);
        }
    }

    #[test]
    fn vanishing_orders_at_origin() {
        let c = curve(3, 3);
        let cap = 20;
        let x = [(1u32, 0u32, Felt::ONE)];
        let y = [(0u32, 1u32, Felt::ONE)];
        let one = [(0u32, 0u32, Felt::ONE)];
        assert_eq!(
            c.vanishing_order(&x, Point::ORIGIN, cap).unwrap(),
            VanishingOrder::Exact(1)
        );
        assert_eq!(
            c.vanishing_order(&y, Point::ORIGIN, cap).unwrap(),
            VanishingOrder::Exact(13)
        );
        assert_eq!(
            c.vanishing_order(&one, Point::ORIGIN, cap).unwrap(),
            VanishingOrder::Exact(0)
        );
        assert!(c.vanishing_order(&[], Point::ORIGIN, cap).is_err());
    }

    #[test]
    fn vanishing_order_is_additive() {
        let c = curve(3, 3);
        let cap = 20;
        // f = x, h = y, f*h = x*y
        let fh = [(1u32, 1u32, Felt::ONE)];
        assert_eq!(
            c.vanishing_order(&fh, Point::ORIGIN, cap).unwrap(),
            VanishingOrder::Exact(14)
        );
    }

    #[test]
    fn p2_line_count() {
        let f = Arc::new(Field::build(2, 1, 3).unwrap());
        let lines = lines_of_p2(&f);
        assert_eq!(lines.len(), (8 * 8 + 8 + 1) as usize);
    }
}
