//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Criteria 1-9 run by default; criterion 10 is the long
//! extended run and is ignored unless requested.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nt_codes::checks::{self, binom, Verdict};
use nt_codes::code::{
    self, dual_weight_search, min_distance_exhaustive, LinearCode, SearchOptions,
};
use nt_codes::curve::Curve;
use nt_codes::families;
use nt_codes::gf::{Felt, Field};
use nt_codes::matrix::FMatrix;
use nt_codes::spaces;

fn curve(q: u64, r: u32) -> Curve {
    Curve::build(Arc::new(Field::from_q(q, r).unwrap())).unwrap()
}

fn finish(criterion: u32, desc: &str, ok: bool) {
    println!(
        "criterion {}: {} - {}",
        criterion,
        if ok { "pass" } else { "FAIL" },
        desc
    );
    assert!(ok, "criterion {} failed: {}", criterion, desc);
}

fn dual_report(code: &LinearCode, w_max: usize) -> nt_codes::WeightReport {
    dual_weight_search(&code.gen, &code.points, w_max, SearchOptions::default())
}

#[test]
fn criterion_01_example_1_distances_and_count() {
    let c = curve(2, 3);
    let rep1 = dual_report(&families::build_cd(&c, 1).unwrap(), 3);
    let rep2 = dual_report(&families::build_cd(&c, 2).unwrap(), 4);
    let ok = rep1.min_distance == Some(3)
        && rep1.counts.get(&3) == Some(&3360)
        && rep2.min_distance == Some(4);
    finish(1, "C(1) dual distance 3 with 3360 words, C(2) dual distance 4", ok);
}

#[test]
fn criterion_02_example_2_reproduction() {
    let c = curve(3, 3);
    let basis = spaces::basis_twisted(&c, 2, 1, 2).unwrap();
    let mut labels: Vec<String> = basis.iter().map(|m| m.label()).collect();
    labels.sort();
    let basis_ok = labels == ["x^2", "xy", "y"];
    let code = families::build_cdab(&c, 2, 1, 2).unwrap();
    // the evaluation set is all q^(2r-1) affine points minus the origin
    let params_ok = (code.n(), code.k()) == (242, 3);
    let rep = dual_report(&code, 2);
    let dual_ok = rep.min_distance == Some(2) && rep.counts.get(&2) == Some(&728);
    finish(
        2,
        "basis {y, xy, x^2}, n=242, k=3, dual distance 2 with 728 words",
        basis_ok && params_ok && dual_ok,
    );
}

#[test]
fn criterion_03_exact_count_law_a1() {
    let c = curve(2, 3);
    let mut ok = true;
    for (d, expected) in [(1i64, 336u64), (2, 224)] {
        let code = families::build_cda(&c, d, 1).unwrap();
        let rep = dual_report(&code, d as usize + 1);
        ok &= rep.min_distance == Some(d as usize + 1)
            && rep.counts.get(&(d as usize + 1)) == Some(&expected);
    }
    finish(3, "C(d,1) dual counts 336 (d=1) and 224 (d=2)", ok);
}

#[test]
fn criterion_04_two_point_case_grid() {
    let c = curve(2, 3);
    let mut ok = true;
    let mut covered = 0;
    for d in 1..=2i64 {
        for a in 0..=1u64 {
            for b in 0..=6u64 {
                let out = checks::check_teo_ab(&c, d, a, b, 0).unwrap();
                match out.verdict {
                    Verdict::Pass => covered += 1,
                    Verdict::Unsupported => {}
                    Verdict::Fail => {
                        eprintln!("(d,a,b)=({},{},{}): {:?}", d, a, b, out.witness);
                        ok = false;
                    }
                }
            }
        }
    }
    // 12 of the 28 grid points fall in a covered case; the rest are the
    // excluded regimes (a' = b' = 0, or b > d with d = 1)
    ok &= covered == 12;
    finish(
        4,
        &format!("two-point case law over the (d,a,b) grid, {} cases covered", covered),
        ok,
    );
}

#[test]
fn criterion_05_dimension_law() {
    let mut ok = true;
    for q in [2u64, 3] {
        let c = curve(q, 3);
        let cc = c.c();
        for d in 1..q as i64 {
            for a in 0..=cc - 1 {
                for b in 1..=cc - 1 {
                    let out = checks::check_dims(&c, d, a, b, 0).unwrap();
                    if out.verdict == Verdict::Fail {
                        eprintln!("q={} (d,a,b)=({},{},{}): {:?}", q, d, a, b, out.witness);
                        ok = false;
                    }
                }
            }
        }
    }
    finish(5, "rank C(d,a,b) matches N(dc-a)-b / N(dc-a-c) over the full grid", ok);
}

#[test]
fn criterion_06_strong_isometry_reduction() {
    let c = curve(2, 3);
    let mut ok = true;
    for a in 0..=1u64 {
        for b in 3..=6u64 {
            let out = checks::check_reduc(&c, 2, a, b, 0).unwrap();
            if out.verdict != Verdict::Pass {
                eprintln!("(2,{},{}): {:?}", a, b, out.witness);
                ok = false;
            }
        }
    }
    finish(6, "b > d > 1 reduction witness and matching dual weight data", ok);
}

#[test]
fn criterion_07_h1_biconditional() {
    let f = Arc::new(Field::from_q(2, 3).unwrap());
    let mut ok = true;
    for d in 1..=3i64 {
        let out = checks::check_lemma_h1(&f, d, 1000, 0xF8);
        if out.verdict != Verdict::Pass {
            eprintln!("d={}: {:?}", d, out.witness);
            ok = false;
        }
    }
    finish(7, "1000 seeded point sets per d in {1,2,3} satisfy the h1 law", ok);
}

#[test]
fn criterion_08_engine_cross_validation() {
    let c = curve(2, 3);
    let f = c.field.clone();
    let n = c.affine_points.len();
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut ok = true;
    for trial in 0..20 {
        let k = rng.gen_range(1..=8usize);
        let rows: Vec<Vec<Felt>> = (0..k)
            .map(|_| (0..n).map(|_| Felt(rng.gen_range(0..f.order) as u32)).collect())
            .collect();
        let gen = FMatrix::from_rows(f.clone(), rows);
        let code = LinearCode::from_matrix(gen, c.affine_points.clone());
        if code.k() == 0 {
            continue;
        }
        let exhaustive = min_distance_exhaustive(&code).unwrap();
        let check = code::dual(&code).gen;
        let search = dual_weight_search(&check, &code.points, 5, SearchOptions::default());
        let d_ex = exhaustive.min_distance.filter(|&w| w <= 5);
        if d_ex != search.min_distance {
            eprintln!("trial {}: distance {:?} vs {:?}", trial, d_ex, search.min_distance);
            ok = false;
        }
        for w in 1..=5usize {
            let a = exhaustive.counts.get(&w).copied().unwrap_or(0);
            let b = search.counts.get(&w).copied().unwrap_or(0);
            if a != b {
                eprintln!("trial {}: weight {} count {} vs {}", trial, w, a, b);
                ok = false;
            }
        }
    }
    finish(8, "20 random subcodes: engines agree on distances and counts to weight 5", ok);
}

#[test]
fn criterion_09_geometric_support_laws() {
    let c = curve(2, 3);
    let mut ok = true;
    // collinearity for C(d) duals, and the horizontal exclusion at d = 2
    for d in 1..=2i64 {
        let out = checks::check_te1(&c, d, 0).unwrap();
        if out.verdict != Verdict::Pass {
            eprintln!("te1 d={}: {:?}", d, out.witness);
            ok = false;
        }
    }
    // verticality for C(d,1) duals
    for d in 1..=2i64 {
        let out = checks::check_teo_a(&c, d, 0).unwrap();
        if out.verdict != Verdict::Pass {
            eprintln!("teo_a d={}: {:?}", d, out.witness);
            ok = false;
        }
    }
    finish(9, "minimum-weight supports collinear, vertical for a=1, horizontal excluded", ok);
}

/// Extended run: weight-4 support search over all of C(2) at q=3
/// (binom(243,4) subsets). Run with `cargo test -- --ignored`.
#[test]
#[ignore]
fn criterion_10_extended_q3_run() {
    let c = curve(3, 3);
    let out = checks::check_te2(&c, 2, 0).unwrap();
    // internal consistency: enumerated per-line-class support counts match
    // the constructive per-line counts, and the certified bound holds
    let qq = c.field.order;
    let qr1 = c.q().pow(c.r() - 1);
    let expected_vertical = qq * binom(qr1, 4);
    let ok = out.verdict == Verdict::Pass;
    finish(
        10,
        &format!(
            "q=3 weight-4 search internally consistent ({} vertical supports expected)",
            expected_vertical
        ),
        ok,
    );
}
