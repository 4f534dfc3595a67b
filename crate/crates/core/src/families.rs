//! The evaluation-code families on the norm-trace curve and the bridges to
//! classical one- and two-point Goppa codes.
//!
//! C(d) evaluates the degree-d forms at all affine points; C(d,a) twists away
//! a*P_inf; C(d,a,b) additionally twists away b*P_0 and drops the P_0 column;
//! C(d,E) twists by an effective divisor E and drops the columns of E_red.

use serde::{Deserialize, Serialize};

use crate::code::{self, LinearCode};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::gf::Felt;
use crate::spaces::{self, CurveDivisor, FunctionSpace};

/// Parameter block naming one code of the studied families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CodeFamilySpec {
    Cd { d: i64 },
    Cda { d: i64, a: u64 },
    Cdab { d: i64, a: u64, b: u64 },
    OnePoint { s: i64 },
    TwoPoint { m: u64, n: u64 },
}

impl CodeFamilySpec {
    pub fn key(&self) -> String {
        match self {
            CodeFamilySpec::Cd { d } => format!("cd-d{}", d),
            CodeFamilySpec::Cda { d, a } => format!("cda-d{}a{}", d, a),
            CodeFamilySpec::Cdab { d, a, b } => format!("cdab-d{}a{}b{}", d, a, b),
            CodeFamilySpec::OnePoint { s } => format!("onepoint-s{}", s),
            CodeFamilySpec::TwoPoint { m, n } => format!("twopoint-m{}n{}", m, n),
        }
    }

    pub fn build(&self, curve: &Curve) -> Result<LinearCode> {
        match *self {
            CodeFamilySpec::Cd { d } => build_cd(curve, d),
            CodeFamilySpec::Cda { d, a } => build_cda(curve, d, a),
            CodeFamilySpec::Cdab { d, a, b } => build_cdab(curve, d, a, b),
            CodeFamilySpec::OnePoint { s } => one_point_goppa(curve, s),
            CodeFamilySpec::TwoPoint { m, n } => Ok(two_point_goppa(curve, m, n)?.0),
        }
    }
}

/// Evaluation points for the C(d,a,b) family: all affine points except P_0.
pub fn points_without_origin(curve: &Curve) -> Vec<Point> {
    curve
        .affine_points
        .iter()
        .copied()
        .filter(|&p| p != Point::ORIGIN)
        .collect()
}

/// C(d): degree-d forms evaluated at all affine points.
pub fn build_cd(curve: &Curve, d: i64) -> Result<LinearCode> {
    let basis = spaces::basis_twisted(curve, d, 0, 0)?;
    code::eval_code(curve, &FunctionSpace::Monomials(basis), &curve.affine_points)
}

/// C(d,a): forms with an extra zero of order a at P_inf, all affine points.
pub fn build_cda(curve: &Curve, d: i64, a: u64) -> Result<LinearCode> {
    let basis = spaces::basis_twisted(curve, d, a, 0)?;
    code::eval_code(curve, &FunctionSpace::Monomials(basis), &curve.affine_points)
}

/// C(d,a,b): forms vanishing to order b at P_0, evaluated away from P_0.
pub fn build_cdab(curve: &Curve, d: i64, a: u64, b: u64) -> Result<LinearCode> {
    let basis = spaces::basis_twisted(curve, d, a, b)?;
    code::eval_code(
        curve,
        &FunctionSpace::Monomials(basis),
        &points_without_origin(curve),
    )
}

/// C(d,E): forms vanishing on E, evaluated away from the support of E.
pub fn build_cde(curve: &Curve, d: i64, e: &CurveDivisor) -> Result<LinearCode> {
    let space = spaces::basis_minus_divisor(curve, d, e)?;
    if space.dim() == 0 {
        return Err(Error::EmptyBasis);
    }
    let support = e.support();
    let points: Vec<Point> = curve
        .affine_points
        .iter()
        .copied()
        .filter(|p| !support.contains(p))
        .collect();
    code::eval_code(curve, &space, &points)
}

/// The one-point code C_s: L(sP_inf) evaluated at all affine points.
pub fn one_point_goppa(curve: &Curve, s: i64) -> Result<LinearCode> {
    let basis = spaces::basis_l_infinity(curve, s)?;
    code::eval_code(curve, &FunctionSpace::Monomials(basis), &curve.affine_points)
}

/// The two-point Goppa code from L(m P_inf + n P_0), evaluated away from
/// P_inf and P_0, together with the diagonal scaling witness that links it
/// to C(d,a,b). Valid in the regime d = d1 + d2 < q.
pub fn two_point_goppa(curve: &Curve, m: u64, n: u64) -> Result<(LinearCode, Vec<Felt>)> {
    let (d, a, b, d2) = spaces::two_point_reduce(curve, m, n)?;
    if d as u64 >= curve.q() {
        return Err(Error::OutOfRange {
            name: "d1+d2",
            value: d,
            range: format!("1..={} (outside validated regime)", curve.q() - 1),
        });
    }
    let base = build_cdab(curve, d, a, b)?;
    let f = &curve.field;
    // y never vanishes on B: the line y = 0 meets the curve rationally only at P_0
    let witness: Vec<Felt> = base
        .points
        .iter()
        .map(|&p| {
            let Point::Affine(_, y) = p else { unreachable!() };
            f.inv(f.pow(y, d2))
        })
        .collect();
    let scaled = code::scale_code(&base, &witness)?;
    Ok((scaled, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{drop_column, dual_weight_search, row_space_contains, SearchOptions};
    use crate::gf::Field;
    use std::sync::Arc;

    fn curve(p: u64, r: u32) -> Curve {
        Curve::build(Arc::new(Field::build(p, 1, r).unwrap())).unwrap()
    }

    #[test]
    fn cd_parameters() {
        let c = curve(2, 3);
        let c1 = build_cd(&c, 1).unwrap();
        assert_eq!((c1.n(), c1.k()), (32, 3));
        let c2 = build_cd(&c, 2).unwrap();
        assert_eq!((c2.n(), c2.k()), (32, 6));
        assert!(build_cd(&c, 3).is_err()); // d = q^(r-1) - 1
    }

    #[test]
    fn cda_f8() {
        let c = curve(2, 3);
        let code = build_cda(&c, 2, 1).unwrap();
        assert_eq!((code.n(), code.k()), (32, 5));
    }

    #[test]
    fn cdab_example_2() {
        let c = curve(3, 3);
        let code = build_cdab(&c, 2, 1, 2).unwrap();
        assert_eq!((code.n(), code.k()), (242, 3));
    }

    #[test]
    fn cdab_b0_is_punctured_cd() {
        let c = curve(2, 3);
        let punct = drop_column(&build_cd(&c, 2).unwrap(), Point::ORIGIN).unwrap();
        let direct = build_cdab(&c, 2, 0, 0).unwrap();
        assert!(punct.same_code(&direct));
    }

    #[test]
    fn one_point_matches_cd_for_s_dc() {
        let c = curve(2, 3);
        let one = one_point_goppa(&c, 7).unwrap();
        assert!(one.same_code(&build_cd(&c, 1).unwrap()));
        // for d = 2 >= q the inclusion C(2) in C_14 is strict
        let one14 = one_point_goppa(&c, 14).unwrap();
        let c2 = build_cd(&c, 2).unwrap();
        assert!(row_space_contains(&one14, &c2));
        assert!(one14.k() > c2.k());
    }

    #[test]
    fn one_point_s0_is_repetition() {
        let c = curve(2, 3);
        let code = one_point_goppa(&c, 0).unwrap();
        assert_eq!(code.k(), 1);
        assert!(code.gen.row(0).iter().all(|&v| v == Felt::ONE));
    }

    #[test]
    fn code_inclusion_cd_in_cs() {
        // C(d) is a subcode of C_{dc}, with equality for d < q
        let c = curve(2, 3);
        for d in 1..=2i64 {
            let cs = one_point_goppa(&c, d * 7).unwrap();
            let cd = build_cd(&c, d).unwrap();
            assert!(row_space_contains(&cs, &cd));
        }
    }

    #[test]
    fn two_point_example_2() {
        let c = curve(3, 3);
        let (code, witness) = two_point_goppa(&c, 12, 11).unwrap();
        assert_eq!((code.n(), code.k()), (242, 3));
        assert!(witness.iter().all(|w| !w.is_zero()));
        // dual minimum distance 2, as for C(2,1,2)
        let rep = dual_weight_search(&code.gen, &code.points, 2, SearchOptions::default());
        assert_eq!(rep.min_distance, Some(2));
        let base = build_cdab(&c, 2, 1, 2).unwrap();
        let rep2 = dual_weight_search(&base.gen, &base.points, 2, SearchOptions::default());
        assert_eq!(rep.counts, rep2.counts);
    }

    #[test]
    fn two_point_c_zero_matches_one_point() {
        let c = curve(2, 3);
        let (code, witness) = two_point_goppa(&c, 7, 0).unwrap();
        assert!(witness.iter().all(|&w| w == Felt::ONE));
        let punct = drop_column(&one_point_goppa(&c, 7).unwrap(), Point::ORIGIN).unwrap();
        assert!(code.same_code(&punct));
    }

    #[test]
    fn two_point_regime_guard() {
        let c = curve(2, 3);
        assert!(two_point_goppa(&c, 7, 7).is_err()); // d = 2 >= q
        assert!(two_point_goppa(&c, 0, 0).is_err());
    }
}
