//! Exact arithmetic of monomial ideals in `n` variables.
//!
//! An ideal is stored by its unique minimal generating set, kept as an
//! antichain of exponent vectors in lexicographic order. The empty generator
//! set is the zero ideal; the single all-zeros generator is the unit ideal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;

/// Intermediate generator sets larger than this abort with `CapacityExceeded`.
pub const DEFAULT_GENERATOR_CAP: usize = 200_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("exponent vector length {got} does not match ambient {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("prime support must be a nonempty subset of the variables")]
    EmptyPrimeSupport,
    #[error("prime list must be nonempty")]
    EmptyPrimeList,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("generator set exceeded the cap of {cap}")]
    CapacityExceeded { cap: usize },
}

/// The exponent vector of a monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

impl Monomial {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise ≤, i.e. this monomial divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise max (the lcm of the two monomials).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Componentwise sum (the product of the two monomials).
    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// 1-based indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Exponents truncated to 0/1.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// A monomial ideal given by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal", into = "RawIdeal")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct RawIdeal {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = IdealError;
    fn try_from(raw: RawIdeal) -> Result<Self, IdealError> {
        MonomialIdeal::minimalize(raw.n, raw.generators.into_iter().map(Monomial))
    }
}

impl From<MonomialIdeal> for RawIdeal {
    fn from(ideal: MonomialIdeal) -> RawIdeal {
        RawIdeal {
            n: ideal.n,
            generators: ideal.generators.into_iter().map(|m| m.0).collect(),
        }
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonomialIdeal(n={}, gens={:?})", self.n, self.generators)
    }
}

impl MonomialIdeal {
    /// Keeps exactly the componentwise-minimal vectors of `gens`.
    /// Idempotent; duplicates collapse.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut list: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.len() != n {
                return Err(IdealError::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            list.push(g);
        }
        Ok(MonomialIdeal {
            n,
            generators: minimal_antichain(list),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial(vec![0; n])],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    fn check_compatible(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.n != other.n {
            return Err(IdealError::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Set-theoretic intersection, computed as the minimalized pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.intersect_capped(other, DEFAULT_GENERATOR_CAP)
    }

    pub fn intersect_capped(
        &self,
        other: &MonomialIdeal,
        cap: usize,
    ) -> Result<MonomialIdeal, IdealError> {
        self.check_compatible(other)?;
        if self.generators.len().saturating_mul(other.generators.len()) > cap {
            return Err(IdealError::CapacityExceeded { cap });
        }
        let mut pairs = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                pairs.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            generators: minimal_antichain(pairs),
        })
    }

    /// Product ideal: minimalized pairwise exponent sums.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.multiply_capped(other, DEFAULT_GENERATOR_CAP)
    }

    pub fn multiply_capped(
        &self,
        other: &MonomialIdeal,
        cap: usize,
    ) -> Result<MonomialIdeal, IdealError> {
        self.check_compatible(other)?;
        if self.generators.len().saturating_mul(other.generators.len()) > cap {
            return Err(IdealError::CapacityExceeded { cap });
        }
        let mut pairs = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                pairs.push(a.product(b));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            generators: minimal_antichain(pairs),
        })
    }

    /// `m`-th ordinary power, `m ≥ 1`.
    pub fn power(&self, m: u32) -> Result<MonomialIdeal, IdealError> {
        assert!(m >= 1, "power exponent must be positive");
        let mut out = self.clone();
        for _ in 1..m {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool, IdealError> {
        if u.len() != self.n {
            return Err(IdealError::LengthMismatch {
                expected: self.n,
                got: u.len(),
            });
        }
        Ok(self.generators.iter().any(|g| g.divides(u)))
    }

    /// True when the minimal generators have pairwise disjoint supports, the
    /// monomial-ideal complete-intersection criterion.
    pub fn is_complete_intersection(&self) -> Result<bool, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut used = vec![false; self.n];
        for g in &self.generators {
            for v in g.support() {
                if used[v - 1] {
                    return Ok(false);
                }
                used[v - 1] = true;
            }
        }
        Ok(true)
    }

    /// The radical: exponents truncated to 0/1, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            generators: minimal_antichain(self.generators.iter().map(|g| g.radical()).collect()),
        }
    }
}

/// `℘_A^m`: all exponent vectors supported on `A` of total degree exactly `m`.
pub fn prime_power(support: &[usize], m: u32, n: usize) -> Result<MonomialIdeal, IdealError> {
    if support.is_empty() {
        return Err(IdealError::EmptyPrimeSupport);
    }
    for &v in support {
        if v == 0 || v > n {
            return Err(IdealError::LengthMismatch {
                expected: n,
                got: v,
            });
        }
    }
    assert!(m >= 1, "prime power exponent must be positive");
    let mut gens = Vec::new();
    let mut exps = vec![0u32; support.len()];
    distribute(m, 0, &mut exps, &mut |exps| {
        let mut mono = vec![0u32; n];
        for (t, &v) in support.iter().enumerate() {
            mono[v - 1] = exps[t];
        }
        gens.push(Monomial(mono));
    });
    // compositions of m are already pairwise incomparable and generated in
    // canonical order, but run the normal constructor anyway
    MonomialIdeal::minimalize(n, gens)
}

fn distribute(remaining: u32, idx: usize, exps: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if idx + 1 == exps.len() {
        exps[idx] = remaining;
        emit(exps);
        return;
    }
    for take in 0..=remaining {
        exps[idx] = take;
        distribute(remaining - take, idx + 1, exps, emit);
    }
}

/// `⋂ ℘_A^m` over the given prime supports: the `m`-th symbolic power of the
/// square-free ideal whose minimal primes are the `℘_A`.
pub fn symbolic_power_from_primes(
    primes: &[Vec<usize>],
    m: u32,
    n: usize,
) -> Result<MonomialIdeal, IdealError> {
    symbolic_power_from_primes_capped(primes, m, n, DEFAULT_GENERATOR_CAP)
}

pub fn symbolic_power_from_primes_capped(
    primes: &[Vec<usize>],
    m: u32,
    n: usize,
    cap: usize,
) -> Result<MonomialIdeal, IdealError> {
    if primes.is_empty() {
        return Err(IdealError::EmptyPrimeList);
    }
    let mut out: Option<MonomialIdeal> = None;
    for support in primes {
        let pp = prime_power(support, m, n)?;
        out = Some(match out {
            None => pp,
            Some(acc) => acc.intersect_capped(&pp, cap)?,
        });
    }
    Ok(out.unwrap())
}

/// The Stanley-Reisner ideal: generated by the minimal non-faces of the complex.
pub fn stanley_reisner_ideal(cx: &SimplicialComplex) -> MonomialIdeal {
    let n = cx.n();
    let mut gens: Vec<Monomial> = Vec::new();
    // scan subsets by increasing cardinality; a minimal non-face is a non-face
    // all of whose proper subsets are faces, i.e. no earlier generator divides it
    let mut subset_buf: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &subset_buf {
            let start = s.last().map_or(1, |&v| v + 1);
            for v in start..=n {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        for t in &next {
            if !cx.is_face(t) {
                let mono = indicator(t, n);
                if !gens.iter().any(|g| g.divides(&mono)) {
                    gens.push(mono);
                }
            }
        }
        next.retain(|t| cx.is_face(t));
        subset_buf = next;
        if subset_buf.is_empty() {
            break;
        }
    }
    MonomialIdeal::minimalize(n, gens).unwrap()
}

/// The cover ideal `J(Δ) = ⋂_F ℘_F` over the facets of the complex.
pub fn cover_ideal(cx: &SimplicialComplex) -> MonomialIdeal {
    symbolic_power_from_primes(cx.facets(), 1, cx.n())
        .expect("a valid complex has a nonempty facet list with nonempty facets")
}

fn indicator(set: &[usize], n: usize) -> Monomial {
    let mut mono = vec![0u32; n];
    for &v in set {
        mono[v - 1] = 1;
    }
    Monomial(mono)
}

/// Retains the componentwise-minimal elements, sorted lexicographically.
fn minimal_antichain(mut list: Vec<Monomial>) -> Vec<Monomial> {
    list.sort_by_key(|m| m.total_degree());
    let mut kept: Vec<Monomial> = Vec::new();
    for m in list {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}
