//! Linear codes over F_{q^r}: evaluation codes, duals via nullspace, minimum
//! distance and minimum-weight-codeword counting, and strong isometry.
//!
//! Two independent weight engines are provided. `min_distance_exhaustive`
//! walks every codeword and is the oracle; `dual_weight_search` enumerates
//! column subsets of a parity-check matrix, sharing elimination state along
//! the subset prefix tree, and counts codewords of exact support by
//! inclusion-exclusion over sub-supports.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{Curve, LineClass, Point, ProjLine};
use crate::error::{Error, Result};
use crate::gf::{Felt, Field};
use crate::matrix::FMatrix;
use crate::spaces::FunctionSpace;

/// A linear code given by a full-row-rank generator in reduced row echelon
/// form, with evaluation points as column labels.
#[derive(Clone)]
pub struct LinearCode {
    pub gen: FMatrix,
    pub points: Vec<Point>,
}

impl LinearCode {
    pub fn n(&self) -> usize {
        self.gen.cols
    }

    pub fn k(&self) -> usize {
        self.gen.rows
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.gen.field
    }

    pub fn from_matrix(mut m: FMatrix, points: Vec<Point>) -> LinearCode {
        let (rank, _) = m.rref();
        let rows: Vec<Vec<Felt>> = (0..rank).map(|i| m.row_vec(i)).collect();
        let mut gen = FMatrix::from_rows(m.field.clone(), rows);
        if gen.rows == 0 {
            gen.cols = m.cols;
        }
        LinearCode { gen, points }
    }

    /// Row-space equality; generators in RREF are canonical.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        if self.n() != other.n() || self.k() != other.k() {
            return false;
        }
        (0..self.k()).all(|i| self.gen.row(i) == other.gen.row(i))
    }
}

/// Evaluate a function space at a list of affine curve points.
pub fn eval_code(curve: &Curve, space: &FunctionSpace, points: &[Point]) -> Result<LinearCode> {
    if space.dim() == 0 {
        return Err(Error::EmptyBasis);
    }
    for &p in points {
        if !p.is_affine() {
            return Err(Error::PointAtInfinity);
        }
    }
    let rows: Vec<Vec<Felt>> = (0..space.dim())
        .map(|k| points.iter().map(|&p| space.eval(curve, k, p)).collect())
        .collect();
    let m = FMatrix::from_rows(curve.field.clone(), rows);
    Ok(LinearCode::from_matrix(m, points.to_vec()))
}

/// The dual code: generator is the nullspace of the generator.
pub fn dual(code: &LinearCode) -> LinearCode {
    let ns = code.gen.nullspace();
    LinearCode {
        gen: ns,
        points: code.points.clone(),
    }
}

/// Columnwise scaling by a full-support vector. Preserves weights and supports.
pub fn scale_code(code: &LinearCode, x: &[Felt]) -> Result<LinearCode> {
    if x.len() != code.n() {
        return Err(Error::CodeMismatch);
    }
    if let Some(pos) = x.iter().position(|c| c.is_zero()) {
        return Err(Error::ZeroScaleComponent(pos));
    }
    let f = code.field().clone();
    let rows: Vec<Vec<Felt>> = (0..code.k())
        .map(|i| {
            code.gen
                .row(i)
                .iter()
                .zip(x)
                .map(|(&g, &xi)| f.mul(g, xi))
                .collect()
        })
        .collect();
    let m = FMatrix::from_rows(f, rows);
    Ok(LinearCode::from_matrix(m, code.points.clone()))
}

/// Puncture the code at the column labelled by `label`.
pub fn drop_column(code: &LinearCode, label: Point) -> Result<LinearCode> {
    let Some(idx) = code.points.iter().position(|&p| p == label) else {
        return Err(Error::MissingColumn);
    };
    let f = code.field().clone();
    let rows: Vec<Vec<Felt>> = (0..code.k())
        .map(|i| {
            let mut r = code.gen.row_vec(i);
            r.remove(idx);
            r
        })
        .collect();
    let m = FMatrix::from_rows(f, rows);
    let mut points = code.points.clone();
    points.remove(idx);
    Ok(LinearCode::from_matrix(m, points))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Engine {
    Exhaustive,
    SupportSearch,
}

/// A support of a (minimum-weight) codeword with its geometric classification.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SupportInfo {
    pub cols: Vec<usize>,
    pub points: Vec<Point>,
    pub line: Option<(Felt, Felt, Felt)>,
    pub class: Option<LineClass>,
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    pub min_distance: Option<usize>,
    /// Codeword count per weight, over the searched band.
    pub counts: BTreeMap<usize, u64>,
    /// Supports of codewords at the minimum weight.
    pub supports: Vec<SupportInfo>,
    /// All supports with a positive codeword count, keyed by weight.
    pub supports_by_weight: BTreeMap<usize, Vec<Vec<usize>>>,
    pub engine: Engine,
    /// Largest weight covered by the search.
    pub w_max: usize,
    pub elapsed_ms: u64,
}

impl WeightReport {
    /// Attach collinearity lines and line classes to the recorded supports.
    pub fn classify_supports(&mut self, curve: &Curve) {
        for s in &mut self.supports {
            match curve.collinear(&s.points) {
                Some(l) => {
                    s.line = Some((l.a, l.b, l.c));
                    s.class = Some(l.class);
                }
                None => {
                    s.line = None;
                    s.class = None;
                }
            }
        }
    }
}

fn make_supports(points: &[Point], cols: &[Vec<usize>]) -> Vec<SupportInfo> {
    let mut sorted: Vec<Vec<usize>> = cols.to_vec();
    sorted.sort();
    sorted
        .into_iter()
        .map(|c| SupportInfo {
            points: c.iter().map(|&i| points[i]).collect(),
            cols: c,
            line: None,
            class: None,
        })
        .collect()
}

/// Full weight distribution by walking all Q^k codewords.
pub fn min_distance_exhaustive(code: &LinearCode) -> Result<WeightReport> {
    let start = Instant::now();
    let f = code.field().clone();
    let total = (f.order as u128).checked_pow(code.k() as u32);
    match total {
        Some(t) if t <= 1 << 24 => {}
        _ => {
            return Err(Error::EnumerationTooLarge(total.unwrap_or(u128::MAX)));
        }
    }
    let n = code.n();
    let k = code.k();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut min_w: Option<usize> = None;
    let mut min_supports: Vec<Vec<usize>> = Vec::new();

    // DFS over message digits; scratch[level] holds the partial combination.
    let mut scratch: Vec<Vec<Felt>> = vec![vec![Felt::ZERO; n]; k + 1];
    let mut stack: Vec<(usize, u32)> = vec![(0, 0)];
    // iterative DFS: (level, next scalar)
    while let Some((level, s)) = stack.pop() {
        if level == k {
            let word = &scratch[k];
            let support: Vec<usize> = (0..n).filter(|&j| !word[j].is_zero()).collect();
            let w = support.len();
            if w > 0 {
                *counts.entry(w).or_insert(0) += 1;
                match min_w {
                    Some(m) if w > m => {}
                    Some(m) if w == m => min_supports.push(support),
                    _ => {
                        min_w = Some(w);
                        min_supports = vec![support];
                    }
                }
            }
            continue;
        }
        if s as u64 >= f.order {
            continue;
        }
        stack.push((level, s + 1));
        let scalar = Felt(s);
        let row = code.gen.row(level);
        let (lower, upper) = scratch.split_at_mut(level + 1);
        let src = &lower[level];
        let dst = &mut upper[0];
        for j in 0..n {
            dst[j] = f.add(src[j], f.mul(scalar, row[j]));
        }
        stack.push((level + 1, 0));
    }

    min_supports.sort();
    min_supports.dedup();
    let mut supports_by_weight = BTreeMap::new();
    if let Some(m) = min_w {
        supports_by_weight.insert(m, min_supports.clone());
    }
    Ok(WeightReport {
        min_distance: min_w,
        counts,
        supports: make_supports(&code.points, &min_supports),
        supports_by_weight,
        engine: Engine::Exhaustive,
        w_max: n,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Options for the subset-based dual weight search.
#[derive(Clone, Copy, Debug)]
#[derive(Default)]
pub struct SearchOptions {
    /// Emit a progress line to stderr every 10^6 visited subsets.
    pub progress: bool,
}


struct SubsetSearch<'a> {
    field: &'a Field,
    cols: &'a [Vec<Felt>],
    w_max: usize,
    progress: Option<&'a AtomicU64>,
}

#[derive(Default)]
struct PartialResult {
    counts: BTreeMap<usize, u64>,
    supports: BTreeMap<usize, Vec<Vec<usize>>>,
    visited: u64,
}

impl<'a> SubsetSearch<'a> {
    /// Reduce a column against the current echelon basis; returns the residual
    /// normalized to pivot 1, with its pivot row, or None if dependent.
    fn reduce(&self, col: &[Felt], basis: &[(Vec<Felt>, usize)]) -> Option<(Vec<Felt>, usize)> {
        let f = self.field;
        let mut v = col.to_vec();
        for (b, pb) in basis {
            let c = v[*pb];
            if !c.is_zero() {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = f.sub(*vi, f.mul(c, *bi));
                }
            }
        }
        let pivot = v.iter().position(|c| !c.is_zero())?;
        let inv = f.inv(v[pivot]);
        for vi in v.iter_mut() {
            *vi = f.mul(inv, *vi);
        }
        Some((v, pivot))
    }

    fn rank_of(&self, subset: &[usize]) -> usize {
        let mut basis: Vec<(Vec<Felt>, usize)> = Vec::with_capacity(subset.len());
        for &c in subset {
            if let Some(b) = self.reduce(&self.cols[c], &basis) {
                basis.push(b);
            }
        }
        basis.len()
    }

    /// Number of codewords (full-support dependency vectors) with support
    /// exactly `s`, by inclusion-exclusion over sub-supports.
    fn exact_support_count(&self, s: &[usize]) -> u64 {
        let w = s.len();
        let q = self.field.order as i128;
        let mut total: i128 = 0;
        for mask in 0u32..(1 << w) {
            let sub: Vec<usize> = (0..w).filter(|&i| mask >> i & 1 == 0).collect();
            let dropped = w - sub.len();
            let nullity = sub.len() - self.rank_of(&sub.iter().map(|&i| s[i]).collect::<Vec<_>>());
            let term = q.pow(nullity as u32);
            if dropped.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
        debug_assert!(total >= 0);
        total as u64
    }

    fn dfs(
        &self,
        start: usize,
        chosen: &mut Vec<usize>,
        basis: &mut Vec<(Vec<Felt>, usize)>,
        rank_def: usize,
        out: &mut PartialResult,
    ) {
        for c in start..self.cols.len() {
            chosen.push(c);
            out.visited += 1;
            if out.visited.is_multiple_of(4096) {
                if let Some(counter) = self.progress {
                    let prev = counter.fetch_add(4096, Ordering::Relaxed);
                    if prev / 1_000_000 != (prev + 4096) / 1_000_000 {
                        eprintln!("  ... {} subsets visited", prev + 4096);
                    }
                }
            }
            let reduced = self.reduce(&self.cols[c], basis);
            let def = rank_def + usize::from(reduced.is_none());
            if def > 0 {
                let cnt = self.exact_support_count(chosen);
                if cnt > 0 {
                    *out.counts.entry(chosen.len()).or_insert(0) += cnt;
                    out.supports
                        .entry(chosen.len())
                        .or_default()
                        .push(chosen.clone());
                }
            }
            if chosen.len() < self.w_max {
                match reduced {
                    Some(b) => {
                        basis.push(b);
                        self.dfs(c + 1, chosen, basis, def, out);
                        basis.pop();
                    }
                    None => self.dfs(c + 1, chosen, basis, def, out),
                }
            }
            chosen.pop();
        }
    }
}

/// Search the dual of the code generated by `check` for codewords of weight
/// up to `w_max`. Weight-w words of the dual correspond to w-column subsets
/// of `check` carrying a full-support dependency.
pub fn dual_weight_search(
    check: &FMatrix,
    points: &[Point],
    w_max: usize,
    opts: SearchOptions,
) -> WeightReport {
    let start = Instant::now();
    let cols: Vec<Vec<Felt>> = (0..check.cols).map(|j| check.col_vec(j)).collect();
    let counter = AtomicU64::new(0);
    let search = SubsetSearch {
        field: &check.field,
        cols: &cols,
        w_max,
        progress: opts.progress.then_some(&counter),
    };
    // partition the subset space by the first chosen column
    let partials: Vec<PartialResult> = (0..cols.len())
        .into_par_iter()
        .map(|c0| {
            let mut out = PartialResult::default();
            let mut chosen = vec![c0];
            out.visited += 1;
            let mut basis = Vec::new();
            match search.reduce(&cols[c0], &basis) {
                Some(b) => {
                    if w_max > 1 {
                        basis.push(b);
                        search.dfs(c0 + 1, &mut chosen, &mut basis, 0, &mut out);
                    }
                }
                None => {
                    // a zero column: weight-1 dual words exist
                    let cnt = search.exact_support_count(&chosen);
                    if cnt > 0 {
                        *out.counts.entry(1).or_insert(0) += cnt;
                        out.supports.entry(1).or_default().push(chosen.clone());
                    }
                    if w_max > 1 {
                        search.dfs(c0 + 1, &mut chosen, &mut basis, 1, &mut out);
                    }
                }
            }
            out
        })
        .collect();

    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut supports_by_weight: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for p in partials {
        for (w, c) in p.counts {
            *counts.entry(w).or_insert(0) += c;
        }
        for (w, mut s) in p.supports {
            supports_by_weight.entry(w).or_default().append(&mut s);
        }
    }
    for s in supports_by_weight.values_mut() {
        s.sort();
    }
    let min_distance = counts.keys().copied().next();
    let supports = match min_distance {
        Some(d) => make_supports(points, &supports_by_weight[&d]),
        None => Vec::new(),
    };
    WeightReport {
        min_distance,
        counts,
        supports,
        supports_by_weight,
        engine: Engine::SupportSearch,
        w_max,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// All weight-w supports of the dual, with collinearity classification.
pub fn min_weight_supports(
    curve: &Curve,
    check: &FMatrix,
    points: &[Point],
    w: usize,
) -> Vec<SupportInfo> {
    let report = dual_weight_search(check, points, w, SearchOptions::default());
    let cols = report
        .supports_by_weight
        .get(&w)
        .cloned()
        .unwrap_or_default();
    let mut infos = make_supports(points, &cols);
    for s in &mut infos {
        if let Some(l) = curve.collinear(&s.points) {
            s.line = Some((l.a, l.b, l.c));
            s.class = Some(l.class);
        }
    }
    infos
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Found(Vec<Felt>),
    NoneExists,
    Unknown,
}

/// Search for a full-support x with C = x D. The solution space is the
/// intersection over generator rows d of D of ker(H_C diag(d)); a witness is
/// any full-support vector in it. Exhaustive when the space is small,
/// randomized (2^16 trials) otherwise.
pub fn strong_isometry_witness(c: &LinearCode, d: &LinearCode, seed: u64) -> Result<Witness> {
    if c.n() != d.n() || c.field().order != d.field().order {
        return Err(Error::CodeMismatch);
    }
    if c.k() != d.k() {
        return Ok(Witness::NoneExists);
    }
    let f = c.field().clone();
    let n = c.n();
    let h = c.gen.nullspace(); // parity check of C
    let mut stacked: Vec<Vec<Felt>> = Vec::new();
    for i in 0..d.k() {
        let di = d.gen.row(i);
        for hi in 0..h.rows {
            stacked.push(
                (0..n)
                    .map(|j| f.mul(h[(hi, j)], di[j]))
                    .collect(),
            );
        }
    }
    if stacked.is_empty() {
        // C has full length k = n: any full-support vector works
        return Ok(Witness::Found(vec![Felt::ONE; n]));
    }
    let a = FMatrix::from_rows(f.clone(), stacked);
    let v = a.nullspace();
    if v.rows == 0 {
        return Ok(Witness::NoneExists);
    }
    let dim = v.rows;
    let space_size = (f.order as u128).checked_pow(dim as u32);
    let combine = |coeffs: &[Felt]| -> Vec<Felt> {
        let mut x = vec![Felt::ZERO; n];
        for (i, &ci) in coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for j in 0..n {
                x[j] = f.add(x[j], f.mul(ci, v[(i, j)]));
            }
        }
        x
    };
    match space_size {
        Some(sz) if sz <= 1 << 20 => {
            let mut coeffs = vec![Felt::ZERO; dim];
            for idx in 1..sz {
                let mut rest = idx;
                for c in coeffs.iter_mut() {
                    *c = Felt((rest % f.order as u128) as u32);
                    rest /= f.order as u128;
                }
                let x = combine(&coeffs);
                if x.iter().all(|c| !c.is_zero()) {
                    return Ok(Witness::Found(x));
                }
            }
            Ok(Witness::NoneExists)
        }
        _ => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..(1 << 16) {
                let coeffs: Vec<Felt> = (0..dim)
                    .map(|_| Felt(rng.gen_range(0..f.order as u32)))
                    .collect();
                if coeffs.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let x = combine(&coeffs);
                if x.iter().all(|c| !c.is_zero()) {
                    return Ok(Witness::Found(x));
                }
            }
            Ok(Witness::Unknown)
        }
    }
}

/// Check that every generator row of `sub` lies in the row space of `sup`.
pub fn row_space_contains(sup: &LinearCode, sub: &LinearCode) -> bool {
    if sup.n() != sub.n() {
        return false;
    }
    let f = sup.field().clone();
    let mut rows: Vec<Vec<Felt>> = (0..sup.k()).map(|i| sup.gen.row_vec(i)).collect();
    let base_rank = sup.k();
    for i in 0..sub.k() {
        rows.push(sub.gen.row_vec(i));
    }
    let m = FMatrix::from_rows(f, rows);
    m.rank() == base_rank
}

pub fn line_of_support(curve: &Curve, s: &SupportInfo) -> Option<ProjLine> {
    curve.collinear(&s.points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;
    use std::sync::Arc;

    fn curve(p: u64, r: u32) -> Curve {
        Curve::build(Arc::new(Field::build(p, 1, r).unwrap())).unwrap()
    }

    fn code_cd(c: &Curve, d: i64) -> LinearCode {
        let basis = spaces::basis_twisted(c, d, 0, 0).unwrap();
        eval_code(c, &FunctionSpace::Monomials(basis), &c.affine_points).unwrap()
    }

    #[test]
    fn c1_parameters() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        assert_eq!(code.n(), 32);
        assert_eq!(code.k(), 3);
        let dd = dual(&code);
        assert_eq!(dd.k(), 29);
        // duality: G_C * G_dual^T = 0
        assert!(code.gen.matmul(&dd.gen.transpose()).is_zero());
        // dual of dual is the original row space
        assert!(dual(&dd).same_code(&code));
    }

    #[test]
    fn empty_basis_rejected() {
        let c = curve(2, 3);
        let sp = FunctionSpace::Monomials(vec![]);
        assert!(matches!(
            eval_code(&c, &sp, &c.affine_points),
            Err(Error::EmptyBasis)
        ));
    }

    #[test]
    fn exhaustive_rank_one_full_support() {
        let c = curve(2, 3);
        let sp = FunctionSpace::Monomials(vec![spaces::Monomial::new(0, 0)]);
        let code = eval_code(&c, &sp, &c.affine_points).unwrap();
        let rep = min_distance_exhaustive(&code).unwrap();
        assert_eq!(rep.min_distance, Some(32));
        assert_eq!(rep.counts[&32], 7);
    }

    #[test]
    fn exhaustive_zero_code() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let full = eval_code(
            &c,
            &FunctionSpace::Monomials(spaces::basis_twisted(&c, 1, 0, 0).unwrap()),
            &c.affine_points,
        )
        .unwrap();
        let zero = dual(&dual(&full));
        assert!(zero.same_code(&code));
        // k = 0 code reports no distance
        let z = LinearCode {
            gen: {
                let mut m = crate::matrix::FMatrix::zero(c.field.clone(), 0, 4);
                m.cols = 4;
                m
            },
            points: c.affine_points[..4].to_vec(),
        };
        let rep = min_distance_exhaustive(&z).unwrap();
        assert_eq!(rep.min_distance, None);
    }

    #[test]
    fn search_c1_distance_3_count_3360() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let rep = dual_weight_search(&code.gen, &code.points, 3, SearchOptions::default());
        assert_eq!(rep.min_distance, Some(3));
        assert_eq!(rep.counts[&3], 3360);
    }

    #[test]
    fn search_c2_distance_4() {
        let c = curve(2, 3);
        let code = code_cd(&c, 2);
        assert_eq!(code.k(), 6);
        let rep = dual_weight_search(&code.gen, &code.points, 4, SearchOptions::default());
        assert_eq!(rep.min_distance, Some(4));
    }

    #[test]
    fn search_reports_band_exceeded() {
        let c = curve(2, 3);
        let code = code_cd(&c, 2);
        let rep = dual_weight_search(&code.gen, &code.points, 3, SearchOptions::default());
        assert_eq!(rep.min_distance, None);
        assert!(rep.counts.is_empty());
    }

    #[test]
    fn engines_agree_on_small_dual() {
        // dual of a short random-ish code: compare both engines fully
        let c = curve(2, 3);
        let basis = spaces::basis_twisted(&c, 2, 0, 0).unwrap();
        let pts: Vec<Point> = c.affine_points.iter().copied().take(10).collect();
        let code = eval_code(&c, &FunctionSpace::Monomials(basis), &pts).unwrap();
        let dd = dual(&code);
        let ex = min_distance_exhaustive(&dd).unwrap();
        let se = dual_weight_search(&code.gen, &code.points, 6, SearchOptions::default());
        assert_eq!(ex.min_distance, se.min_distance);
        for w in 1..=6usize {
            assert_eq!(
                ex.counts.get(&w).copied().unwrap_or(0),
                se.counts.get(&w).copied().unwrap_or(0),
                "weight {}",
                w
            );
        }
    }

    #[test]
    fn scaling_preserves_weights() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let f = code.field().clone();
        let x: Vec<Felt> = (0..code.n()).map(|i| Felt(1 + (i as u32 % 7))).collect();
        let scaled = scale_code(&code, &x).unwrap();
        let a = min_distance_exhaustive(&code).unwrap();
        let b = min_distance_exhaustive(&scaled).unwrap();
        assert_eq!(a.counts, b.counts);
        let ones = vec![Felt::ONE; code.n()];
        assert!(scale_code(&code, &ones).unwrap().same_code(&code));
        let mut bad = ones;
        bad[3] = Felt::ZERO;
        assert!(matches!(
            scale_code(&code, &bad),
            Err(Error::ZeroScaleComponent(3))
        ));
        let _ = f;
    }

    #[test]
    fn drop_column_shrinks() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let p = code.points[0];
        let punc = drop_column(&code, p).unwrap();
        assert_eq!(punc.n(), 31);
        assert!(drop_column(&punc, p).is_err());
    }

    #[test]
    fn witness_identity_and_dim_mismatch() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        match strong_isometry_witness(&code, &code, 0).unwrap() {
            Witness::Found(x) => assert!(x.iter().all(|c| !c.is_zero())),
            other => panic!("expected witness, got {:?}", other),
        }
        let other = code_cd(&c, 2);
        assert_eq!(
            strong_isometry_witness(&code, &other, 0).unwrap(),
            Witness::NoneExists
        );
    }

    #[test]
    fn witness_detects_scaling() {
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let x: Vec<Felt> = (0..code.n()).map(|i| Felt(1 + (i as u32 % 7))).collect();
        let scaled = scale_code(&code, &x).unwrap();
        match strong_isometry_witness(&scaled, &code, 0).unwrap() {
            Witness::Found(w) => {
                let again = scale_code(&code, &w).unwrap();
                assert!(again.same_code(&scaled));
            }
            other => panic!("expected witness, got {:?}", other),
        }
    }

    #[test]
    fn inclusion_exclusion_nullity_one() {
        // for nullity-1 supports the per-support count is exactly Q - 1
        let c = curve(2, 3);
        let code = code_cd(&c, 1);
        let rep = dual_weight_search(&code.gen, &code.points, 3, SearchOptions::default());
        let per_support: u64 = rep.counts[&3] / rep.supports_by_weight[&3].len() as u64;
        assert_eq!(per_support, 7);
        assert_eq!(rep.counts[&3] % rep.supports_by_weight[&3].len() as u64, 0);
    }
}
