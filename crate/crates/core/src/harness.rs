//! The two-path verification pipeline and corpus runner.
//!
//! For a complex Δ the pipeline checks the facet exchange property directly,
//! then computes the symbolic powers of the cover ideal two independent ways
//! (basic-cover enumeration and prime-power intersection), runs the depth
//! engine on them per coefficient field, estimates the growth of the basic
//! cover counts, and cross-checks everything into a single report. A
//! non-matroid whose tested powers all come out Cohen-Macaulay is reported as
//! undetected within the bound, never as a contradiction.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::covers::{
    self, CoverError, GrowthVerdict, HilbertProfile, DEFAULT_COVER_CAP, DEFAULT_DEAD_ZONE,
};
use crate::homology::{self, CoefficientField, HomologyError, DEFAULT_LATTICE_CAP};
use crate::ideal::{self, IdealError, DEFAULT_GENERATOR_CAP};

pub const DEFAULT_M_MAX: u32 = 4;
pub const DEFAULT_GROWTH_WINDOW: (u32, u32) = (4, 12);
pub const DEFAULT_CHARACTERISTICS: [u32; 2] = [0, 2];

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("window [{lo}, {hi}] needs at least {need} points")]
    WindowTooSmall { lo: u32, hi: u32, need: usize },
    #[error("corpus family {family} is too large to enumerate")]
    CorpusTooLarge { family: String },
    #[error("wall-clock budget of {secs}s exceeded")]
    BudgetExceeded { secs: u64 },
    #[error("fixture {path}: {message}")]
    BadFixture { path: String, message: String },
    #[error("no symbolic power could be computed within the caps")]
    NothingComputed,
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Cohen-Macaulay verdict for one symbolic power over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmRecord {
    pub m: u32,
    pub characteristic: u32,
    pub outcome: CmOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CmOutcome {
    Computed {
        depth: usize,
        krull_dim: usize,
        projective_dimension: usize,
        cohen_macaulay: bool,
    },
    Aborted {
        reason: String,
    },
}

/// Generator data for one symbolic power: counts from the prime-intersection
/// route and whether the basic-cover route produced the identical ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicRecord {
    pub m: u32,
    pub generators: Option<usize>,
    pub routes_agree: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub k_min: u32,
    pub k_max: u32,
    pub exponent: f64,
    pub verdict: GrowthVerdict,
}

/// Per-complex verification record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub d: usize,
    pub pure: bool,
    pub matroid: bool,
    pub symbolic: Vec<SymbolicRecord>,
    pub cm: Vec<CmRecord>,
    pub growth: Option<GrowthRecord>,
    /// Non-matroid whose tested powers were all Cohen-Macaulay.
    pub undetected_within_bound: bool,
    /// False only if a matroid exhibited a non-CM symbolic power.
    pub theorem_consistent: bool,
    /// Does `n - min depth` over the tested powers sit inside the dimension
    /// bracket the growth verdict implies? `None` when the growth verdict is
    /// indeterminate or no depth was computed over the rationals. The tested
    /// minimum sits below the true fiber dimension, so `AtLeast` brackets can
    /// only fail while a non-matroid is still undetected.
    pub fiber_identity_consistent: Option<bool>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn detected_non_cm(&self) -> bool {
        self.cm.iter().any(|r| {
            matches!(
                r.outcome,
                CmOutcome::Computed {
                    cohen_macaulay: false,
                    ..
                }
            )
        })
    }

    pub fn min_depth(&self, characteristic: u32) -> Option<usize> {
        self.cm
            .iter()
            .filter(|r| r.characteristic == characteristic)
            .filter_map(|r| match r.outcome {
                CmOutcome::Computed { depth, .. } => Some(depth),
                CmOutcome::Aborted { .. } => None,
            })
            .min()
    }
}

/// Runs the full pipeline on one complex. Sub-task capacity failures are
/// recorded per power instead of aborting the report.
pub fn verify_theorem(
    cx: &SimplicialComplex,
    id: &str,
    m_max: u32,
    fields: &[CoefficientField],
    k_max: u32,
) -> VerificationReport {
    assert!(m_max >= 1 && !fields.is_empty());
    let mut timings = BTreeMap::new();

    let t0 = Instant::now();
    let matroid = cx.is_matroid();
    timings.insert("matroid".to_string(), t0.elapsed().as_millis() as u64);

    let mut symbolic = Vec::new();
    let mut cm = Vec::new();
    for m in 1..=m_max {
        let t0 = Instant::now();
        // duality reduction: test J(Δ)^(m), whose minimal primes are the facets
        let primes_route =
            ideal::symbolic_power_from_primes_capped(cx.facets(), m, cx.n(), DEFAULT_GENERATOR_CAP);
        let covers_route = covers::generators_via_covers(cx, m);
        let (power, record) = match (primes_route, covers_route) {
            (Ok(a), Ok(b)) => {
                let agree = a == b;
                let rec = SymbolicRecord {
                    m,
                    generators: Some(a.generators().len()),
                    routes_agree: Some(agree),
                    note: None,
                };
                (Some(a), rec)
            }
            (Ok(a), Err(e)) => {
                let rec = SymbolicRecord {
                    m,
                    generators: Some(a.generators().len()),
                    routes_agree: None,
                    note: Some(format!("cover route: {e}")),
                };
                (Some(a), rec)
            }
            (Err(e), Ok(b)) => {
                let rec = SymbolicRecord {
                    m,
                    generators: Some(b.generators().len()),
                    routes_agree: None,
                    note: Some(format!("prime route: {e}")),
                };
                (Some(b), rec)
            }
            (Err(e1), Err(e2)) => {
                let rec = SymbolicRecord {
                    m,
                    generators: None,
                    routes_agree: None,
                    note: Some(format!("prime route: {e1}; cover route: {e2}")),
                };
                (None, rec)
            }
        };
        symbolic.push(record);
        timings.insert(format!("symbolic_m{m}"), t0.elapsed().as_millis() as u64);

        for &field in fields {
            let label = format!("{id}:m{m}");
            let outcome = match &power {
                None => CmOutcome::Aborted {
                    reason: "no generator route succeeded".into(),
                },
                Some(ideal) => {
                    let t0 = Instant::now();
                    let res =
                        homology::depth_and_cm_capped(ideal, field, label, DEFAULT_LATTICE_CAP);
                    timings.insert(
                        format!("depth_m{m}_char{}", field.characteristic()),
                        t0.elapsed().as_millis() as u64,
                    );
                    match res {
                        Ok(report) => CmOutcome::Computed {
                            depth: report.depth,
                            krull_dim: report.krull_dim,
                            projective_dimension: report.projective_dimension,
                            cohen_macaulay: report.cohen_macaulay,
                        },
                        Err(e) => CmOutcome::Aborted {
                            reason: e.to_string(),
                        },
                    }
                }
            };
            cm.push(CmRecord {
                m,
                characteristic: field.characteristic(),
                outcome,
            });
        }
    }

    let t0 = Instant::now();
    let (k_min, _) = DEFAULT_GROWTH_WINDOW;
    let growth = covers::estimate_fiber_dimension_capped(
        cx,
        k_min,
        k_max,
        DEFAULT_COVER_CAP,
        DEFAULT_DEAD_ZONE,
    )
    .ok()
    .map(|(exponent, verdict)| GrowthRecord {
        k_min,
        k_max,
        exponent,
        verdict,
    });
    timings.insert("growth".to_string(), t0.elapsed().as_millis() as u64);

    let computed_cm: Vec<bool> = cm
        .iter()
        .filter_map(|r| match r.outcome {
            CmOutcome::Computed { cohen_macaulay, .. } => Some(cohen_macaulay),
            CmOutcome::Aborted { .. } => None,
        })
        .collect();
    let theorem_consistent = if matroid {
        computed_cm.iter().all(|&x| x)
    } else {
        true
    };
    let undetected_within_bound = !matroid && computed_cm.iter().all(|&x| x);

    let rational_min_depth = cm
        .iter()
        .filter(|r| r.characteristic == 0)
        .filter_map(|r| match r.outcome {
            CmOutcome::Computed { depth, .. } => Some(depth),
            CmOutcome::Aborted { .. } => None,
        })
        .min();
    let fiber_identity_consistent = match (&growth, rational_min_depth) {
        (Some(record), Some(min_depth)) => {
            let rhs = cx.n() - min_depth;
            match record.verdict {
                GrowthVerdict::DimAtMost(hi) => Some(rhs <= hi),
                GrowthVerdict::DimAtLeast(lo) => Some(rhs >= lo),
                GrowthVerdict::Indeterminate => None,
            }
        }
        _ => None,
    };

    VerificationReport {
        id: id.to_string(),
        n: cx.n(),
        d: cx.dim() + 1,
        pure: cx.is_pure(),
        matroid,
        symbolic,
        cm,
        growth,
        undetected_within_bound,
        theorem_consistent,
        fiber_identity_consistent,
        timings_ms: timings,
    }
}

/// Bounded check of the identity `dim Ā(Δ) = n - min_m depth(S/J(Δ)^(m))`:
/// the right side is approximated by the minimum over the tested powers, the
/// left side by the growth-criterion bracket.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberDimensionReport {
    pub m_max: u32,
    pub tested_m: Vec<u32>,
    pub min_depth: usize,
    /// `n - min depth` over the tested powers.
    pub rhs: usize,
    pub exponent: f64,
    /// Dimension bracket implied by the growth verdict; `None` when
    /// indeterminate.
    pub lhs: Option<[usize; 2]>,
    pub consistent: bool,
}

pub fn verify_fiber_dimension_identity(
    cx: &SimplicialComplex,
    m_max: u32,
    k_window: (u32, u32),
) -> Result<FiberDimensionReport, HarnessError> {
    let field = CoefficientField::rationals();
    let mut tested = Vec::new();
    let mut min_depth: Option<usize> = None;
    for m in 1..=m_max {
        let power = match ideal::symbolic_power_from_primes_capped(
            cx.facets(),
            m,
            cx.n(),
            DEFAULT_GENERATOR_CAP,
        ) {
            Ok(p) => p,
            Err(IdealError::CapacityExceeded { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        match homology::depth_and_cm_capped(&power, field, format!("m{m}"), DEFAULT_LATTICE_CAP) {
            Ok(report) => {
                tested.push(m);
                min_depth = Some(min_depth.map_or(report.depth, |d| d.min(report.depth)));
            }
            Err(HomologyError::CapacityExceeded { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    let min_depth = min_depth.ok_or(HarnessError::NothingComputed)?;
    let rhs = cx.n() - min_depth;

    let (k_min, k_max) = k_window;
    let (exponent, verdict) = covers::estimate_fiber_dimension_capped(
        cx,
        k_min,
        k_max,
        DEFAULT_COVER_CAP,
        DEFAULT_DEAD_ZONE,
    )?;
    let lhs = match verdict {
        GrowthVerdict::DimAtMost(d) => Some([1, d]),
        GrowthVerdict::DimAtLeast(d) => Some([d, cx.n()]),
        GrowthVerdict::Indeterminate => None,
    };
    let consistent = lhs.is_none_or(|[lo, hi]| lo <= rhs && rhs <= hi);
    Ok(FiberDimensionReport {
        m_max,
        tested_m: tested,
        min_depth,
        rhs,
        exponent,
        lhs,
        consistent,
    })
}

/// A polynomial fitted to a window of a Hilbert profile by finite
/// differences. Coefficients are exact rationals in the monomial basis,
/// constant term first. `exact` means the successive differences stabilized
/// at zero inside the window, in which case the polynomial reproduces every
/// in-window count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFit {
    pub window: (u32, u32),
    pub coefficients: Vec<BigRational>,
    pub exact: bool,
}

impl PolynomialFit {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coefficients
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, k: u32) -> BigRational {
        let x = BigRational::from(BigInt::from(k));
        let mut acc = BigRational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

impl Serialize for PolynomialFit {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawFit {
            window: [self.window.0, self.window.1],
            coefficients: self.coefficients.iter().map(|c| c.to_string()).collect(),
            exact: self.exact,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolynomialFit {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawFit::deserialize(deserializer)?;
        let coefficients = raw
            .coefficients
            .iter()
            .map(|s| s.parse::<BigRational>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(PolynomialFit {
            window: (raw.window[0], raw.window[1]),
            coefficients,
            exact: raw.exact,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RawFit {
    window: [u32; 2],
    coefficients: Vec<String>,
    exact: bool,
}

/// Finite-difference fit of `profile` on `window = (lo, hi)` inclusive.
///
/// When some difference order vanishes identically the fit is exact with that
/// degree; otherwise the full Newton interpolant through the window is
/// returned with `exact = false`.
pub fn fit_hilbert_polynomial(
    profile: &HilbertProfile,
    window: (u32, u32),
) -> Result<PolynomialFit, HarnessError> {
    let (lo, hi) = window;
    if hi < lo || hi - lo + 1 < 2 {
        return Err(HarnessError::WindowTooSmall { lo, hi, need: 2 });
    }
    let values: Option<Vec<i64>> = (lo..=hi)
        .map(|k| profile.count_at(k).map(|c| c as i64))
        .collect();
    let Some(values) = values else {
        return Err(HarnessError::WindowTooSmall {
            lo,
            hi,
            need: (hi - lo + 1) as usize,
        });
    };

    let len = values.len();
    let mut table: Vec<Vec<i64>> = vec![values];
    while table.last().unwrap().len() > 1 {
        let prev = table.last().unwrap();
        table.push(prev.windows(2).map(|w| w[1] - w[0]).collect());
    }
    let stabilized = table.iter().position(|row| row.iter().all(|&x| x == 0));
    let (order, exact) = match stabilized {
        Some(r) => (r, true),
        None => (len, false),
    };

    // Newton forward form around lo: sum_j Δ^j f(lo) * C(k - lo, j)
    let mut poly = vec![BigRational::zero(); order.max(1)];
    if order == 0 {
        // identically zero window
        return Ok(PolynomialFit {
            window,
            coefficients: vec![BigRational::zero()],
            exact: true,
        });
    }
    for (j, row) in table.iter().take(order).enumerate() {
        let lead = BigRational::from(BigInt::from(row[0]));
        // C(k - lo, j) expanded in powers of k
        let mut basis = vec![BigRational::one()];
        for t in 0..j {
            // multiply by (k - lo - t) / (t + 1)
            let shift = BigRational::from(BigInt::from(lo as i64 + t as i64));
            let div = BigRational::from(BigInt::from(t as i64 + 1));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &shift;
            }
            basis = next.into_iter().map(|c| c / &div).collect();
        }
        for (p, c) in basis.into_iter().enumerate() {
            poly[p] += c * &lead;
        }
    }
    while poly.len() > 1 && poly.last().unwrap().is_zero() {
        poly.pop();
    }
    let fit = PolynomialFit {
        window,
        coefficients: poly,
        exact,
    };
    if fit.exact {
        debug_assert!((lo..=hi).all(|k| {
            fit.evaluate(k) == BigRational::from(BigInt::from(profile.count_at(k).unwrap()))
        }));
    }
    Ok(fit)
}

/// Scans windows `[lo, hi]` with `lo` increasing until the fit is exact,
/// returning the first exact fit. `None` if no window of length ≥ 4 fits.
pub fn find_stable_fit(profile: &HilbertProfile, hi: u32) -> Option<PolynomialFit> {
    let mut lo = *profile.k.first()?;
    while hi >= lo + 3 {
        if let Ok(fit) = fit_hilbert_polynomial(profile, (lo, hi)) {
            if fit.exact {
                return Some(fit);
            }
        }
        lo += 1;
    }
    None
}

/// Corpus description: generator families plus explicit fixture files, with
/// the run parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_pure_max_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_max_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skeletons_max_n: Option<usize>,
    /// Inclusive cycle length range, e.g. `[3, 10]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete_graphs_max_n: Option<usize>,
    #[serde(default)]
    pub files: Vec<CorpusFileEntry>,
    #[serde(default = "default_m_max")]
    pub m_max: u32,
    #[serde(default = "default_characteristics")]
    pub characteristics: Vec<u32>,
    #[serde(default = "default_k_max")]
    pub k_max: u32,
}

fn default_m_max() -> u32 {
    DEFAULT_M_MAX
}

fn default_characteristics() -> Vec<u32> {
    DEFAULT_CHARACTERISTICS.to_vec()
}

fn default_k_max() -> u32 {
    DEFAULT_GROWTH_WINDOW.1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusFileEntry {
    pub path: String,
    /// Run the pipeline on the dual complex instead.
    #[serde(default)]
    pub dualize: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub reports: Vec<VerificationReport>,
    pub consistent: usize,
    pub inconsistent: usize,
    pub undetected: usize,
    pub elapsed_ms: u64,
}

impl CorpusSummary {
    pub fn all_consistent(&self) -> bool {
        self.inconsistent == 0
    }
}

/// Expands the generator families of a corpus spec into labeled complexes,
/// sorted by id. File paths are resolved against `base_dir`.
pub fn expand_corpus(
    spec: &CorpusSpec,
    base_dir: &std::path::Path,
) -> Result<Vec<(String, SimplicialComplex)>, HarnessError> {
    let mut items: Vec<(String, SimplicialComplex)> = Vec::new();

    if let Some(max_n) = spec.all_pure_max_n {
        for n in 1..=max_n {
            for s in 1..=n {
                let subsets = combinations(n, s);
                // 2^|subsets| complexes per family; n = 5 peaks at 2^10
                if subsets.len() > 12 {
                    return Err(HarnessError::CorpusTooLarge {
                        family: format!("pure n={n} s={s}"),
                    });
                }
                for mask in 1u32..1 << subsets.len() {
                    let facets: Vec<Vec<usize>> = subsets
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| mask >> t & 1 == 1)
                        .map(|(_, f)| f.clone())
                        .collect();
                    let cx = SimplicialComplex::new(n, facets).unwrap();
                    items.push((format!("pure-n{n}-s{s}-{mask:04x}"), cx));
                }
            }
        }
    }

    if let Some(max_n) = spec.all_max_n {
        for n in 1..=max_n {
            if n > 5 {
                return Err(HarnessError::CorpusTooLarge {
                    family: format!("all n={n}"),
                });
            }
            let mut all_subsets: Vec<Vec<usize>> = Vec::new();
            for s in 1..=n {
                all_subsets.extend(combinations(n, s));
            }
            let mut chosen: Vec<usize> = Vec::new();
            let mut counter = 0usize;
            antichains(&all_subsets, 0, &mut chosen, &mut |picked| {
                let facets: Vec<Vec<usize>> =
                    picked.iter().map(|&t| all_subsets[t].clone()).collect();
                let cx = SimplicialComplex::new(n, facets).unwrap();
                items.push((format!("all-n{n}-{counter:05}"), cx));
                counter += 1;
            });
        }
    }

    if let Some(max_n) = spec.skeletons_max_n {
        for n in 1..=max_n {
            for k in 0..=n as i64 - 1 {
                items.push((
                    format!("skeleton-{n}-{k}"),
                    SimplicialComplex::skeleton(n, k).unwrap(),
                ));
            }
        }
    }

    if let Some([from, to]) = spec.cycles {
        for len in from.max(3)..=to {
            items.push((
                format!("cycle-{len}"),
                SimplicialComplex::cycle(len).unwrap(),
            ));
        }
    }

    if let Some(max_n) = spec.complete_graphs_max_n {
        for n in 3..=max_n {
            items.push((
                format!("complete-{n}"),
                SimplicialComplex::skeleton(n, 1).unwrap(),
            ));
        }
    }

    for entry in &spec.files {
        let path = base_dir.join(&entry.path);
        let text = std::fs::read_to_string(&path)?;
        let cx: SimplicialComplex =
            serde_json::from_str(&text).map_err(|e| HarnessError::BadFixture {
                path: entry.path.clone(),
                message: e.to_string(),
            })?;
        let stem = std::path::Path::new(&entry.path)
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_else(|| entry.path.clone());
        if entry.dualize {
            let dual = cx.dual().map_err(|e| HarnessError::BadFixture {
                path: entry.path.clone(),
                message: e.to_string(),
            })?;
            items.push((format!("{stem}-dual"), dual));
        } else {
            items.push((stem, cx));
        }
    }

    items.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(items)
}

fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=s).collect();
    loop {
        out.push(current.clone());
        let mut idx = s;
        while idx > 0 && current[idx - 1] == n - (s - idx) {
            idx -= 1;
        }
        if idx == 0 {
            return out;
        }
        current[idx - 1] += 1;
        for t in idx..s {
            current[t] = current[t - 1] + 1;
        }
    }
}

fn antichains(
    subsets: &[Vec<usize>],
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    for idx in start..subsets.len() {
        let comparable = chosen.iter().any(|&c| {
            let (a, b) = (&subsets[c], &subsets[idx]);
            a.iter().all(|v| b.contains(v)) || b.iter().all(|v| a.contains(v))
        });
        if !comparable {
            chosen.push(idx);
            antichains(subsets, idx + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Runs `verify_theorem` over the whole corpus in parallel. Returns the
/// reports sorted by id plus summary counts; any theorem inconsistency shows
/// up in the counts for the caller to turn into an exit code.
pub fn run_corpus(
    spec: &CorpusSpec,
    base_dir: &std::path::Path,
    budget: Option<Duration>,
) -> Result<CorpusSummary, HarnessError> {
    let start = Instant::now();
    let items = expand_corpus(spec, base_dir)?;
    let fields: Vec<CoefficientField> = spec
        .characteristics
        .iter()
        .map(|&p| CoefficientField::of_characteristic(p))
        .collect::<Result<_, _>>()?;

    let reports: Result<Vec<VerificationReport>, HarnessError> = items
        .par_iter()
        .map(|(id, cx)| {
            if let Some(limit) = budget {
                if start.elapsed() > limit {
                    return Err(HarnessError::BudgetExceeded {
                        secs: limit.as_secs(),
                    });
                }
            }
            Ok(verify_theorem(cx, id, spec.m_max, &fields, spec.k_max))
        })
        .collect();
    let mut reports = reports?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));

    let consistent = reports.iter().filter(|r| r.theorem_consistent).count();
    let inconsistent = reports.len() - consistent;
    let undetected = reports.iter().filter(|r| r.undetected_within_bound).count();
    Ok(CorpusSummary {
        reports,
        consistent,
        inconsistent,
        undetected,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
