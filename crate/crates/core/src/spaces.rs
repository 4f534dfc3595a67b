//! Monomial bases of L(sQ_inf) and of the twisted spaces
//! H^0(O(d)(-aP_inf - bP_0)) and H^0(O(d)(-E)); the dimension function N(s);
//! two-point divisor reduction; the line-intersection maxima m(E) and m_V(E).

use serde::{Deserialize, Serialize};

use crate::curve::{Curve, LineClass, Point};
use crate::error::{Error, Result};
use crate::gf::Felt;
use crate::matrix::FMatrix;

/// A monomial x^i y^j.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32) -> Monomial {
        Monomial { i, j }
    }

    /// Pole order at Q_inf: i*q^(r-1) + j*c.
    pub fn pole_order(&self, curve: &Curve) -> u64 {
        self.i as u64 * curve.q().pow(curve.r() - 1) + self.j as u64 * curve.c()
    }

    /// Vanishing order at P_0: i + j*c.
    pub fn vanishing_at_origin(&self, curve: &Curve) -> u64 {
        self.i as u64 + self.j as u64 * curve.c()
    }

    pub fn eval(&self, curve: &Curve, p: Point) -> Felt {
        let Point::Affine(x, y) = p else {
            panic!("monomial evaluation requires an affine point")
        };
        let f = &curve.field;
        f.mul(f.pow(x, self.i as u64), f.pow(y, self.j as u64))
    }

    pub fn label(&self) -> String {
        match (self.i, self.j) {
            (0, 0) => "1".into(),
            (i, 0) => format_power("x", i),
            (0, j) => format_power("y", j),
            (i, j) => format!("{}{}", format_power("x", i), format_power("y", j)),
        }
    }
}

fn format_power(v: &str, e: u32) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{}^{}", v, e)
    }
}

/// Monomial basis of the Riemann-Roch space L(sQ_inf), ordered by pole value.
pub fn basis_l_infinity(curve: &Curve, s: i64) -> Result<Vec<Monomial>> {
    let qr = curve.field.order;
    let c = curve.c();
    if s < 0 || s as u64 > c * qr {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            range: format!("0..={}", c * qr),
        });
    }
    let qr1 = curve.q().pow(curve.r() - 1);
    let mut out = Vec::new();
    for i in 0..qr as u32 {
        for j in 0..qr1 as u32 {
            let m = Monomial::new(i, j);
            if m.pole_order(curve) <= s as u64 {
                out.push(m);
            }
        }
    }
    out.sort_by_key(|m| m.pole_order(curve));
    Ok(out)
}

/// N(s) = dim L(sQ_inf).
pub fn dim_l_infinity(curve: &Curve, s: i64) -> Result<usize> {
    Ok(basis_l_infinity(curve, s)?.len())
}

/// N(s) extended by zero to negative arguments.
pub fn dim_l_infinity_or_zero(curve: &Curve, s: i64) -> usize {
    if s < 0 {
        0
    } else {
        basis_l_infinity(curve, s).map_or(0, |b| b.len())
    }
}

fn check_d_range(curve: &Curve, d: i64) -> Result<()> {
    let hi = curve.q().pow(curve.r() - 1) as i64 - 1;
    if d <= 0 || d >= hi {
        return Err(Error::OutOfRange {
            name: "d",
            value: d,
            range: format!("1..={}", hi - 1),
        });
    }
    Ok(())
}

/// Monomial basis of H^0(O(d)(-aP_inf - bP_0)): all x^i y^j with i + j <= d,
/// pole order at Q_inf at most dc - a, and vanishing order at P_0 at least b.
/// Both twist conditions are valuation cutoffs at points where the candidate
/// monomials have pairwise-distinct valuations, so the subspace is monomially
/// spanned. Ordered by pole value.
pub fn basis_twisted(curve: &Curve, d: i64, a: u64, b: u64) -> Result<Vec<Monomial>> {
    check_d_range(curve, d)?;
    let cap = d * curve.c() as i64 - a as i64;
    let mut out = Vec::new();
    for i in 0..=d as u32 {
        for j in 0..=(d as u32 - i) {
            let m = Monomial::new(i, j);
            if (m.pole_order(curve) as i64) <= cap && m.vanishing_at_origin(curve) >= b {
                out.push(m);
            }
        }
    }
    out.sort_by_key(|m| m.pole_order(curve));
    Ok(out)
}

/// An effective divisor supported at distinct affine points of the curve.
#[derive(Clone, Debug)]
pub struct CurveDivisor {
    entries: Vec<(Point, usize)>,
}

impl CurveDivisor {
    pub fn empty() -> CurveDivisor {
        CurveDivisor { entries: Vec::new() }
    }

    pub fn new(curve: &Curve, entries: Vec<(Point, usize)>) -> Result<CurveDivisor> {
        let mut seen = Vec::new();
        for &(p, m) in &entries {
            if !p.is_affine() {
                return Err(Error::BadDivisorSupport("point at infinity".into()));
            }
            if !curve.on_curve(p) {
                return Err(Error::BadDivisorSupport(format!("{:?} not on curve", p)));
            }
            if m == 0 {
                return Err(Error::BadDivisorSupport("zero multiplicity".into()));
            }
            if seen.contains(&p) {
                return Err(Error::BadDivisorSupport(format!("{:?} repeated", p)));
            }
            seen.push(p);
        }
        Ok(CurveDivisor { entries })
    }

    pub fn reduced(curve: &Curve, points: &[Point]) -> Result<CurveDivisor> {
        CurveDivisor::new(curve, points.iter().map(|&p| (p, 1)).collect())
    }

    pub fn entries(&self) -> &[(Point, usize)] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.entries.iter().all(|&(_, m)| m == 1)
    }

    pub fn support(&self) -> Vec<Point> {
        self.entries.iter().map(|&(p, _)| p).collect()
    }
}

/// A finite-dimensional space of functions on the curve, either monomially
/// spanned or given by coefficient rows over a monomial coordinate list.
#[derive(Clone, Debug)]
pub enum FunctionSpace {
    Monomials(Vec<Monomial>),
    Combination {
        monomials: Vec<Monomial>,
        rows: Vec<Vec<Felt>>,
    },
}

impl FunctionSpace {
    pub fn dim(&self) -> usize {
        match self {
            FunctionSpace::Monomials(ms) => ms.len(),
            FunctionSpace::Combination { rows, .. } => rows.len(),
        }
    }

    /// Evaluate basis function `k` at an affine point.
    pub fn eval(&self, curve: &Curve, k: usize, p: Point) -> Felt {
        match self {
            FunctionSpace::Monomials(ms) => ms[k].eval(curve, p),
            FunctionSpace::Combination { monomials, rows } => {
                let f = &curve.field;
                let mut acc = Felt::ZERO;
                for (m, &coef) in monomials.iter().zip(&rows[k]) {
                    if !coef.is_zero() {
                        acc = f.add(acc, f.mul(coef, m.eval(curve, p)));
                    }
                }
                acc
            }
        }
    }

    /// Each basis function as sparse bivariate terms.
    pub fn terms(&self, k: usize) -> Vec<(u32, u32, Felt)> {
        match self {
            FunctionSpace::Monomials(ms) => vec![(ms[k].i, ms[k].j, Felt::ONE)],
            FunctionSpace::Combination { monomials, rows } => monomials
                .iter()
                .zip(&rows[k])
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, &c)| (m.i, m.j, c))
                .collect(),
        }
    }
}

/// H^0(O(d)(-E)) as the kernel of the matrix stacking, for each (P, m) in E,
/// the first m local-expansion coefficients of every degree-<=d monomial at P.
pub fn basis_minus_divisor(curve: &Curve, d: i64, e: &CurveDivisor) -> Result<FunctionSpace> {
    check_d_range(curve, d)?;
    if e.degree() as i64 > d {
        return Err(Error::OutOfRange {
            name: "deg(E)",
            value: e.degree() as i64,
            range: format!("0..={}", d),
        });
    }
    let mut monomials = Vec::new();
    for i in 0..=d as u32 {
        for j in 0..=(d as u32 - i) {
            monomials.push(Monomial::new(i, j));
        }
    }
    monomials.sort_by_key(|m| m.pole_order(curve));
    if e.entries().is_empty() {
        return Ok(FunctionSpace::Monomials(monomials));
    }
    // constraint rows: coefficient of t^l (l < m) of each monomial's expansion
    let mut constraint_rows: Vec<Vec<Felt>> = Vec::new();
    for &(p, m) in e.entries() {
        let expansions: Vec<Vec<Felt>> = monomials
            .iter()
            .map(|mono| {
                let terms = [(mono.i, mono.j, Felt::ONE)];
                expansion_coeffs(curve, &terms, p, m)
            })
            .collect::<Result<_>>()?;
        for l in 0..m {
            constraint_rows.push(expansions.iter().map(|ex| ex[l]).collect());
        }
    }
    let mat = FMatrix::from_rows(curve.field.clone(), constraint_rows);
    let kernel = mat.nullspace();
    let rows: Vec<Vec<Felt>> = (0..kernel.rows).map(|i| kernel.row_vec(i)).collect();
    Ok(FunctionSpace::Combination { monomials, rows })
}

/// First `k` coefficients of f(x0 + t, y(t)) at an affine point.
fn expansion_coeffs(
    curve: &Curve,
    terms: &[(u32, u32, Felt)],
    p: Point,
    k: usize,
) -> Result<Vec<Felt>> {
    let Point::Affine(x0, _) = p else {
        return Err(Error::PointAtInfinity);
    };
    let f = &curve.field;
    let ys = curve.local_expansion(p, k)?;
    let xs = crate::curve::PowerSeries::from_coeffs(curve.field.clone(), {
        let mut v = vec![Felt::ZERO; k];
        if k > 0 {
            v[0] = x0;
        }
        if k > 1 {
            v[1] = Felt::ONE;
        }
        v
    });
    let mut acc = crate::curve::PowerSeries::zero(curve.field.clone(), k);
    for &(i, j, coef) in terms {
        let t = xs.pow(i as u64).mul(&ys.pow(j as u64)).scale(coef);
        acc = acc.add(&t);
    }
    let _ = f;
    Ok(acc.coeffs)
}

/// Decompose a two-point divisor m*P_inf + n*P_0 as d*c*P_inf - a*P_inf - b*P_0
/// with 0 <= a, b <= c-1, returning (d, a, b, d2) where d2 is the exponent of
/// the strong-isometry scaling witness y^(-d2).
pub fn two_point_reduce(curve: &Curve, m: u64, n: u64) -> Result<(i64, u64, u64, u64)> {
    if m + n == 0 {
        return Err(Error::OutOfRange {
            name: "m+n",
            value: 0,
            range: "> 0".into(),
        });
    }
    let c = curve.c();
    let d1 = m.div_ceil(c);
    let a = d1 * c - m;
    let d2 = n.div_ceil(c);
    let b = d2 * c - n;
    Ok(((d1 + d2) as i64, a, b, d2))
}

/// m(E): maximum number of points of the reduced divisor E on a line of the
/// family excluding y = 0 and the line at infinity.
pub fn m_of_e(curve: &Curve, e: &CurveDivisor) -> Result<usize> {
    line_max(curve, e, |l| {
        // exclude y = 0 (a = 0, c = 0) and z = 0
        !(l.class == LineClass::AtInfinity
            || (l.class == LineClass::Horizontal && l.c.is_zero()))
    })
}

/// m_V(E): maximum number of points of the reduced divisor E on a vertical line.
pub fn m_v_of_e(curve: &Curve, e: &CurveDivisor) -> Result<usize> {
    line_max(curve, e, |l| l.class == LineClass::Vertical)
}

fn line_max(
    curve: &Curve,
    e: &CurveDivisor,
    admit: impl Fn(&crate::curve::ProjLine) -> bool,
) -> Result<usize> {
    if !e.is_reduced() {
        return Err(Error::NonReducedDivisor);
    }
    let pts = e.support();
    if pts.is_empty() {
        return Ok(0);
    }
    // every point lies on an admissible line (verticals are in both families)
    let mut best = 1;
    for (idx, &p) in pts.iter().enumerate() {
        for &q in &pts[idx + 1..] {
            let line = curve.line_through(p, q)?;
            if !admit(&line) {
                continue;
            }
            let count = pts
                .iter()
                .filter(|&&s| line.contains(&curve.field, s))
                .count();
            best = best.max(count);
        }
    }
    Ok(best)
}
