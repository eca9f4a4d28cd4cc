//! `k`-covers and basic `k`-covers of a simplicial complex.
//!
//! A `k`-cover is a nonzero function `α: {1..n} → ℕ` whose sum over every
//! facet is at least `k`. It is basic when no coordinate can be lowered
//! without breaking that property; equivalently, every positive coordinate
//! lies in a facet whose sum is exactly `k` (tight). Basic `m`-covers index
//! the minimal generators of the `m`-th symbolic power of the cover ideal,
//! and their count per level is the Hilbert function of the algebra of basic
//! covers. That count's growth separates matroids (degree `d-1`) from
//! non-matroids (degree ≥ `d`), which is what the growth diagnostics here
//! measure.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ExchangeViolation, SimplicialComplex};
use crate::ideal::{IdealError, Monomial, MonomialIdeal};

/// Enumerations longer than this abort with `CapacityExceeded`.
pub const DEFAULT_COVER_CAP: usize = 1_000_000;

/// Growth-exponent estimates within this distance of the decision boundary
/// `d - 1/2` are reported as indeterminate rather than guessed.
pub const DEFAULT_DEAD_ZONE: f64 = 0.35;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("value vector length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("input is not a {k}-cover")]
    NotACover { k: u32 },
    #[error("enumeration exceeded the cap of {cap}")]
    CapacityExceeded { cap: usize },
    #[error("window [{k_min}, {k_max}] has fewer than {need} sample points")]
    WindowTooSmall { k_min: u32, k_max: u32, need: usize },
    #[error("split parameters require -1 <= s <= d-3, got d={d}, s={s}")]
    SplitRangeViolated { d: usize, s: i64 },
    #[error("construction requires a pure complex")]
    NotPure,
    #[error("the supplied triple is not an exchange violation of this complex")]
    NoViolation,
    #[error("tuple shape or sums inconsistent with (d, s, k) = ({d}, {s}, {k})")]
    TupleMismatch { d: usize, s: i64, k: u32 },
    #[error("cover is not basic")]
    NotBasic,
    #[error("complex is not a matroid")]
    NotMatroid,
}

/// A `k`-cover: the value vector `α` together with its level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cover {
    pub k: u32,
    pub values: Vec<u32>,
}

/// Basic-cover counts per level `k = k_range.0 ..= k_range.1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub k: Vec<u32>,
    pub count: Vec<u64>,
}

impl HilbertProfile {
    pub fn count_at(&self, k: u32) -> Option<u64> {
        self.k.iter().position(|&x| x == k).map(|i| self.count[i])
    }
}

/// Verdict of the Hilbert-function growth criterion against the complex's
/// `d = dim Δ + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "dim", rename_all = "snake_case")]
pub enum GrowthVerdict {
    /// Exponent compatible with `d - 1`: `dim Ā(Δ) ≤ d` (matroid signature).
    DimAtMost(usize),
    /// Exponent at least `d`: `dim Ā(Δ) ≥ d + 1` (non-matroid signature).
    DimAtLeast(usize),
    /// Estimate fell in the dead zone around the boundary.
    Indeterminate,
}

/// A witness tuple for split parameters `(d, s)`: `a` nonincreasing of
/// length `d` summing to `k`, and `b` of length `d - s - 1` with every entry
/// ≥ `a₂` and `Σb = a₁ + … + a_{d-s-1}`. Distinct tuples pin distinct basic
/// `k`-covers on a violated exchange, so their count bounds the Hilbert
/// function of a pure non-matroid from below, with growth `Ω(k^{2d-s-3})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WitnessTuple {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl WitnessTuple {
    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn s(&self) -> i64 {
        self.d() as i64 - 1 - self.b.len() as i64
    }
}

fn check_len(cx: &SimplicialComplex, values: &[u32]) -> Result<(), CoverError> {
    if values.len() != cx.n() {
        return Err(CoverError::LengthMismatch {
            expected: cx.n(),
            got: values.len(),
        });
    }
    Ok(())
}

fn facet_sum(values: &[u32], facet: &[usize]) -> u64 {
    facet.iter().map(|&v| values[v - 1] as u64).sum()
}

/// Is `values` a `k`-cover: nonzero, with every facet sum ≥ `k`?
pub fn is_cover(cx: &SimplicialComplex, values: &[u32], k: u32) -> Result<bool, CoverError> {
    check_len(cx, values)?;
    if values.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    Ok(cx.facets().iter().all(|f| facet_sum(values, f) >= k as u64))
}

/// Is `values` a basic `k`-cover: a `k`-cover in which every positive
/// coordinate lies in a tight facet (sum exactly `k`)? By monotonicity of the
/// constraint system this matches the definition "no smaller nonzero vector
/// is still a `k`-cover"; vertices outside every facet must carry 0.
pub fn is_basic_cover(cx: &SimplicialComplex, values: &[u32], k: u32) -> Result<bool, CoverError> {
    if !is_cover(cx, values, k)? {
        return Ok(false);
    }
    let tight: Vec<bool> = cx
        .facets()
        .iter()
        .map(|f| facet_sum(values, f) == k as u64)
        .collect();
    for v in 1..=cx.n() {
        if values[v - 1] == 0 {
            continue;
        }
        let in_tight = cx
            .facets()
            .iter()
            .zip(&tight)
            .any(|(f, &t)| t && f.binary_search(&v).is_ok());
        if !in_tight {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reduces a `k`-cover to a basic one by cyclic passes over the vertices,
/// lowering each coordinate by one unit whenever the result is still a
/// `k`-cover, until a full pass changes nothing. Deterministic; a facet whose
/// sum is already exactly `k` stays untouched, so every coordinate inside one
/// keeps its input value.
pub fn reduce_to_basic(
    cx: &SimplicialComplex,
    values: &[u32],
    k: u32,
) -> Result<Cover, CoverError> {
    if !is_cover(cx, values, k)? {
        return Err(CoverError::NotACover { k });
    }
    let mut alpha = values.to_vec();
    let mut sums: Vec<u64> = cx.facets().iter().map(|f| facet_sum(&alpha, f)).collect();
    let mut positives = alpha.iter().filter(|&&x| x > 0).count();
    loop {
        let mut changed = false;
        for v in 1..=cx.n() {
            if alpha[v - 1] == 0 {
                continue;
            }
            if alpha[v - 1] == 1 && positives == 1 {
                continue; // would become the zero vector
            }
            let feasible = cx
                .facets()
                .iter()
                .enumerate()
                .all(|(fi, f)| f.binary_search(&v).is_err() || sums[fi] > k as u64);
            if feasible {
                alpha[v - 1] -= 1;
                if alpha[v - 1] == 0 {
                    positives -= 1;
                }
                for (fi, f) in cx.facets().iter().enumerate() {
                    if f.binary_search(&v).is_ok() {
                        sums[fi] -= 1;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(is_basic_cover(cx, &alpha, k).unwrap());
    Ok(Cover { k, values: alpha })
}

struct Enumerator<'a> {
    cx: &'a SimplicialComplex,
    k: u32,
    cap: usize,
    /// 0-based facet vertex lists
    facets: Vec<Vec<usize>>,
    facets_of: Vec<Vec<usize>>,
    /// vertices whose facets are all fully assigned once position j is set
    checks_at: Vec<Vec<usize>>,
    alpha: Vec<u32>,
    sums: Vec<u64>,
    out: Vec<Cover>,
}

impl<'a> Enumerator<'a> {
    fn new(cx: &'a SimplicialComplex, k: u32, cap: usize) -> Self {
        let n = cx.n();
        let facets: Vec<Vec<usize>> = cx
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| v - 1).collect())
            .collect();
        let mut facets_of = vec![Vec::new(); n];
        for (fi, f) in facets.iter().enumerate() {
            for &v in f {
                facets_of[v].push(fi);
            }
        }
        let mut checks_at = vec![Vec::new(); n];
        for v in 0..n {
            if facets_of[v].is_empty() {
                continue;
            }
            let done_at = facets_of[v]
                .iter()
                .map(|&fi| *facets[fi].last().unwrap())
                .max()
                .unwrap();
            checks_at[done_at].push(v);
        }
        Enumerator {
            cx,
            k,
            cap,
            facets,
            facets_of,
            checks_at,
            alpha: vec![0; n],
            sums: vec![0; cx.facets().len()],
            out: Vec::new(),
        }
    }

    fn run(mut self) -> Result<Vec<Cover>, CoverError> {
        self.descend(0)?;
        Ok(self.out)
    }

    fn descend(&mut self, j: usize) -> Result<(), CoverError> {
        if j == self.alpha.len() {
            // pruning already enforces basicness; the filter is the correctness gate
            if is_basic_cover(self.cx, &self.alpha, self.k)? {
                if self.out.len() >= self.cap {
                    return Err(CoverError::CapacityExceeded { cap: self.cap });
                }
                self.out.push(Cover {
                    k: self.k,
                    values: self.alpha.clone(),
                });
            }
            return Ok(());
        }
        if self.facets_of[j].is_empty() {
            return self.descend(j + 1);
        }
        // residual feasibility: unassigned vertices contribute at most k each
        let mut lo: i64 = 0;
        for &fi in &self.facets_of[j] {
            let rem = self.facets[fi].iter().filter(|&&u| u > j).count() as i64;
            lo = lo.max(self.k as i64 - self.sums[fi] as i64 - rem * self.k as i64);
        }
        if lo > self.k as i64 {
            return Ok(());
        }
        for val in lo.max(0) as u32..=self.k {
            self.alpha[j] = val;
            for t in 0..self.facets_of[j].len() {
                let fi = self.facets_of[j][t];
                self.sums[fi] += val as u64;
            }
            // every positive vertex whose facets are now all complete must
            // touch a tight facet, or no extension can be basic
            let viable = self.checks_at[j].iter().all(|&v| {
                self.alpha[v] == 0
                    || self.facets_of[v]
                        .iter()
                        .any(|&fi| self.sums[fi] == self.k as u64)
            });
            if viable {
                self.descend(j + 1)?;
            }
            for t in 0..self.facets_of[j].len() {
                let fi = self.facets_of[j][t];
                self.sums[fi] -= val as u64;
            }
        }
        self.alpha[j] = 0;
        Ok(())
    }
}

/// All basic `k`-covers in lexicographic order of their value vectors.
pub fn enumerate_basic_covers(cx: &SimplicialComplex, k: u32) -> Result<Vec<Cover>, CoverError> {
    enumerate_basic_covers_capped(cx, k, DEFAULT_COVER_CAP)
}

pub fn enumerate_basic_covers_capped(
    cx: &SimplicialComplex,
    k: u32,
    cap: usize,
) -> Result<Vec<Cover>, CoverError> {
    assert!(k >= 1, "cover level must be positive");
    Enumerator::new(cx, k, cap).run()
}

/// The Hilbert function of the algebra of basic covers: `count[k-1]` is the
/// number of basic `k`-covers, for `k = 1 ..= k_max`.
pub fn hilbert_function(cx: &SimplicialComplex, k_max: u32) -> Result<HilbertProfile, CoverError> {
    hilbert_function_capped(cx, k_max, DEFAULT_COVER_CAP)
}

pub fn hilbert_function_capped(
    cx: &SimplicialComplex,
    k_max: u32,
    cap: usize,
) -> Result<HilbertProfile, CoverError> {
    assert!(k_max >= 1);
    let mut ks = Vec::new();
    let mut counts = Vec::new();
    for k in 1..=k_max {
        ks.push(k);
        counts.push(enumerate_basic_covers_capped(cx, k, cap)?.len() as u64);
    }
    Ok(HilbertProfile {
        k: ks,
        count: counts,
    })
}

/// The ideal minimally generated by `x^α` over the basic `m`-covers `α`.
/// Equals the symbolic power of the cover ideal computed by prime
/// intersections; the two routes cross-validate each other.
pub fn generators_via_covers(cx: &SimplicialComplex, m: u32) -> Result<MonomialIdeal, CoverError> {
    let covers = enumerate_basic_covers(cx, m)?;
    MonomialIdeal::minimalize(cx.n(), covers.into_iter().map(|c| Monomial(c.values))).map_err(|e| {
        match e {
            IdealError::CapacityExceeded { cap } => CoverError::CapacityExceeded { cap },
            _ => unreachable!("cover vectors always have length n"),
        }
    })
}

/// Growth exponent of the basic-cover counts over `k_min ..= k_max`, from a
/// least-squares fit of `ln count` against `ln k` with a `1/k` regressor
/// absorbing the lower-order drag (a count `A·k^e·(1 + b/k + …)` has
/// `ln count = ln A + e·ln k + b/k + O(1/k²)`, so the plain two-parameter
/// slope lands systematically below `e` on desk-scale windows). The estimate
/// is classified against the boundary `d - 1/2` separating exponent `d - 1`
/// (matroid signature, `dim Ā ≤ d`) from exponent ≥ `d` (`dim Ā ≥ d + 1`),
/// with the dead zone around the boundary reported as indeterminate.
pub fn estimate_fiber_dimension(
    cx: &SimplicialComplex,
    k_min: u32,
    k_max: u32,
) -> Result<(f64, GrowthVerdict), CoverError> {
    estimate_fiber_dimension_capped(cx, k_min, k_max, DEFAULT_COVER_CAP, DEFAULT_DEAD_ZONE)
}

pub fn estimate_fiber_dimension_capped(
    cx: &SimplicialComplex,
    k_min: u32,
    k_max: u32,
    cap: usize,
    dead_zone: f64,
) -> Result<(f64, GrowthVerdict), CoverError> {
    const MIN_POINTS: usize = 6;
    if k_min < 1 || k_max < k_min || (k_max - k_min + 1) < MIN_POINTS as u32 {
        return Err(CoverError::WindowTooSmall {
            k_min,
            k_max,
            need: MIN_POINTS,
        });
    }
    let mut points = Vec::new();
    for k in k_min..=k_max {
        let count = enumerate_basic_covers_capped(cx, k, cap)?.len();
        points.push((k as f64, (count as f64).ln()));
    }
    let estimate = corrected_log_slope(&points);
    let d = cx.dim() + 1;
    let boundary = d as f64 - 0.5;
    let verdict = if estimate < boundary - dead_zone {
        GrowthVerdict::DimAtMost(d)
    } else if estimate > boundary + dead_zone {
        GrowthVerdict::DimAtLeast(d + 1)
    } else {
        GrowthVerdict::Indeterminate
    };
    Ok((estimate, verdict))
}

/// Coefficient of `ln k` in the least-squares fit of `y` on `(1, ln k, 1/k)`.
fn corrected_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sz, mut sy) = (0.0, 0.0, 0.0);
    let (mut sxx, mut sxz, mut szz, mut sxy, mut szy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(k, y) in points {
        let x = k.ln();
        let z = 1.0 / k;
        sx += x;
        sz += z;
        sy += y;
        sxx += x * x;
        sxz += x * z;
        szz += z * z;
        sxy += x * y;
        szy += z * y;
    }
    let m = [[n, sx, sz], [sx, sxx, sxz], [sz, sxz, szz]];
    let det3 = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mut numerator = m;
    let rhs = [sy, sxy, szy];
    for row in 0..3 {
        numerator[row][1] = rhs[row];
    }
    det3(&numerator) / det3(&m)
}

/// All witness tuples for split parameters `(d, s)` at level `k`, in
/// lexicographic order.
pub fn enumerate_witness_tuples(d: usize, s: i64, k: u32) -> Result<Vec<WitnessTuple>, CoverError> {
    if s < -1 || s > d as i64 - 3 {
        return Err(CoverError::SplitRangeViolated { d, s });
    }
    assert!(k >= 1);
    let b_len = (d as i64 - s - 1) as usize;
    let mut out = Vec::new();
    let mut a = vec![0u32; d];
    partitions_into(k, d, 0, u32::MAX, &mut a, &mut |a| {
        let prefix: u32 = a[..b_len].iter().sum();
        let floor = a[1];
        let base = floor as u64 * b_len as u64;
        if (prefix as u64) < base {
            return;
        }
        let spare = prefix - (base as u32);
        let mut c = vec![0u32; b_len];
        distribute_exact(spare, 0, &mut c, &mut |c| {
            let b: Vec<u32> = c.iter().map(|&x| x + floor).collect();
            out.push(WitnessTuple { a: a.to_vec(), b });
        });
    });
    out.sort();
    Ok(out)
}

/// Nonincreasing vectors of length `len` with the given sum, entries ≤ bound.
fn partitions_into(
    sum: u32,
    len: usize,
    idx: usize,
    bound: u32,
    buf: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if idx + 1 == len {
        if sum <= bound {
            buf[idx] = sum;
            emit(buf);
        }
        return;
    }
    // remaining idx..len entries are each ≤ value chosen here
    let slots = (len - idx) as u32;
    let min_here = sum.div_ceil(slots);
    for val in min_here..=sum.min(bound) {
        buf[idx] = val;
        partitions_into(sum - val, len, idx + 1, val, buf, emit);
    }
}

fn distribute_exact(remaining: u32, idx: usize, buf: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if idx + 1 == buf.len() {
        buf[idx] = remaining;
        emit(buf);
        return;
    }
    for take in 0..=remaining {
        buf[idx] = take;
        distribute_exact(remaining - take, idx + 1, buf, emit);
    }
}

fn is_violation(cx: &SimplicialComplex, violation: &ExchangeViolation) -> bool {
    if !cx.is_facet(&violation.f)
        || !cx.is_facet(&violation.g)
        || violation.f.binary_search(&violation.i).is_err()
    {
        return false;
    }
    violation.g.iter().all(|&j| {
        let mut cand: Vec<usize> = violation
            .f
            .iter()
            .copied()
            .filter(|&v| v != violation.i)
            .collect();
        if let Err(pos) = cand.binary_search(&j) {
            cand.insert(pos, j);
        }
        !cx.is_facet(&cand)
    })
}

/// The `k`-cover built from an exchange violation `(F, G, i)` and a witness
/// tuple, where `s` is the greatest integer such that some `s`-dimensional
/// subface of `F \ {i}` joins a `(d-s-2)`-dimensional subface of `G` into a
/// facet, and `F₀`, `G₀` are the canonical-first such faces. The facet `F`
/// and the facet `F₀ ∪ G₀` both sum exactly to `k`, so no reduction to a
/// basic cover can change the values on `F ∪ G₀`.
pub fn build_nonmatroid_cover(
    cx: &SimplicialComplex,
    violation: &ExchangeViolation,
    tuple: &WitnessTuple,
    k: u32,
) -> Result<Cover, CoverError> {
    if !cx.is_pure() {
        return Err(CoverError::NotPure);
    }
    if !is_violation(cx, violation) {
        return Err(CoverError::NoViolation);
    }
    let d = cx.dim() + 1;
    let f_minus_i: Vec<usize> = violation
        .f
        .iter()
        .copied()
        .filter(|&v| v != violation.i)
        .collect();
    let (s, f0, g0) = locate_split(cx, &f_minus_i, &violation.g, d)
        .expect("s = -1 always works: G itself is a facet");
    let mismatch = CoverError::TupleMismatch { d, s, k };
    if tuple.d() != d || tuple.s() != s {
        return Err(mismatch);
    }
    let a = &tuple.a;
    let b = &tuple.b;
    if a.iter().map(|&x| x as u64).sum::<u64>() != k as u64 {
        return Err(mismatch);
    }
    if a.windows(2).any(|w| w[0] < w[1]) {
        return Err(mismatch);
    }
    let b_len = b.len();
    if b.iter().any(|&x| x < a[1])
        || b.iter().map(|&x| x as u64).sum::<u64>()
            != a[..b_len].iter().map(|&x| x as u64).sum::<u64>()
    {
        return Err(mismatch);
    }

    // F ordered as i, then F \ ({i} ∪ F₀) ascending, then F₀ ascending;
    // G₀ ascending takes the b values; all other vertices sit at k.
    let mut ordered_f = vec![violation.i];
    ordered_f.extend(f_minus_i.iter().copied().filter(|v| !f0.contains(v)));
    ordered_f.extend(f0.iter().copied());
    debug_assert_eq!(ordered_f.len(), d);

    let mut values = vec![k; cx.n()];
    for (q, &v) in g0.iter().enumerate() {
        values[v - 1] = b[q];
    }
    for (p, &v) in ordered_f.iter().enumerate() {
        values[v - 1] = a[p];
    }
    debug_assert!(is_cover(cx, &values, k)?);
    debug_assert_eq!(facet_sum(&values, &violation.f), k as u64);
    debug_assert_eq!(
        f0.iter()
            .chain(g0.iter())
            .map(|&v| values[v - 1] as u64)
            .sum::<u64>(),
        k as u64
    );
    Ok(Cover { k, values })
}

/// Greatest `s` with a witnessing pair `(F₀ ⊆ f_minus_i, G₀ ⊆ g)` whose union
/// is a facet; both subsets canonical-first at that `s`.
fn locate_split(
    cx: &SimplicialComplex,
    f_minus_i: &[usize],
    g: &[usize],
    d: usize,
) -> Option<(i64, Vec<usize>, Vec<usize>)> {
    for s in (-1..=d as i64 - 3).rev() {
        let f_size = (s + 1) as usize;
        let g_size = (d as i64 - s - 1) as usize;
        if g_size > g.len() {
            continue;
        }
        for f0 in f_minus_i.iter().copied().combinations(f_size) {
            for g0 in g.iter().copied().combinations(g_size) {
                let mut union: Vec<usize> = f0.iter().chain(g0.iter()).copied().collect();
                union.sort_unstable();
                union.dedup();
                if union.len() == d && cx.is_facet(&union) {
                    return Some((s, f0, g0));
                }
            }
        }
    }
    None
}

/// Does some tight facet's value set contain every value the cover takes on
/// vertices that lie in at least one facet? Holds for every basic cover of a
/// matroid.
pub fn matroid_value_set_check(cx: &SimplicialComplex, cover: &Cover) -> Result<bool, CoverError> {
    if !cx.is_matroid() {
        return Err(CoverError::NotMatroid);
    }
    if !is_basic_cover(cx, &cover.values, cover.k)? {
        return Err(CoverError::NotBasic);
    }
    let value_set: std::collections::BTreeSet<u32> = cx
        .supported_vertices()
        .iter()
        .map(|&v| cover.values[v - 1])
        .collect();
    for f in cx.facets() {
        if facet_sum(&cover.values, f) != cover.k as u64 {
            continue;
        }
        let facet_values: std::collections::BTreeSet<u32> =
            f.iter().map(|&v| cover.values[v - 1]).collect();
        if value_set.is_subset(&facet_values) {
            return Ok(true);
        }
    }
    Ok(false)
}
