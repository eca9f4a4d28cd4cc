//! Simplicial complexes on the vertex set `{1..n}`, stored by their facets.
//!
//! A complex is identified with its set of inclusion-maximal faces. Vertices
//! are 1-based. Facets are kept as ascending vertex lists, sorted
//! lexicographically, so equality is structural and every "first" tie-break
//! in the crate is deterministic.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face list must be nonempty")]
    EmptyFaceList,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the empty set is not accepted as a face")]
    EmptyFacet,
    #[error("facet equals the whole vertex set; the dual complex is undefined")]
    FullFacet,
    #[error("skeleton dimension {k} out of range 0..={max}")]
    SkeletonOutOfRange { k: i64, max: i64 },
}

/// A simplicial complex on `{1..n}`, stored by its facets.
///
/// Invariants: every facet is a nonempty ascending subset of `{1..n}`, no
/// facet contains another, and the facet list is sorted lexicographically.
/// Vertices outside every facet are allowed (`n` is independent of support).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = ComplexError;
    fn try_from(raw: RawComplex) -> Result<Self, ComplexError> {
        SimplicialComplex::new(raw.n, raw.facets)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(cx: SimplicialComplex) -> RawComplex {
        RawComplex {
            n: cx.n,
            facets: cx.facets,
        }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex(n={}, facets={:?})",
            self.n, self.facets
        )
    }
}

/// Witness that the exchange property fails: for facets `f`, `g` and the
/// vertex `i` in `f`, no `j` in `g` makes `(f \ {i}) ∪ {j}` a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeViolation {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub i: usize,
}

/// Face counts per dimension. `counts[j]` is the number of faces of
/// dimension `j - 1`, so `counts[0] = 1` counts the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex whose facets are the inclusion-maximal members of
    /// `faces`. Input faces need not be sorted or distinct.
    pub fn new<I, F>(n: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut cleaned: Vec<Vec<usize>> = Vec::new();
        for face in faces {
            let set: BTreeSet<usize> = face.into_iter().collect();
            if set.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            for &v in &set {
                if v == 0 || v > n {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, n });
                }
            }
            cleaned.push(set.into_iter().collect());
        }
        if cleaned.is_empty() {
            return Err(ComplexError::EmptyFaceList);
        }
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for face in &cleaned {
            if !cleaned
                .iter()
                .any(|other| other.len() > face.len() && is_subset(face, other))
                && !facets.contains(face)
            {
                facets.push(face.clone());
            }
        }
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    /// The `k`-skeleton of the `(n-1)`-simplex: all `(k+1)`-subsets of `{1..n}`.
    pub fn skeleton(n: usize, k: i64) -> Result<Self, ComplexError> {
        if n == 0 || k < 0 || k > n as i64 - 1 {
            return Err(ComplexError::SkeletonOutOfRange {
                k,
                max: n as i64 - 1,
            });
        }
        let size = k as usize + 1;
        let mut facets = Vec::new();
        let mut current: Vec<usize> = (1..=size).collect();
        loop {
            facets.push(current.clone());
            // next combination in lexicographic order
            let mut idx = size;
            while idx > 0 && current[idx - 1] == n - (size - idx) {
                idx -= 1;
            }
            if idx == 0 {
                break;
            }
            current[idx - 1] += 1;
            for t in idx..size {
                current[t] = current[t - 1] + 1;
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    /// The cycle `C_len` as a 1-dimensional complex on `len` vertices.
    pub fn cycle(len: usize) -> Result<Self, ComplexError> {
        if len < 3 {
            return Err(ComplexError::EmptyFaceList);
        }
        let mut edges: Vec<Vec<usize>> = (1..len).map(|v| vec![v, v + 1]).collect();
        edges.push(vec![1, len]);
        Self::new(len, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// dim Δ = max |F| - 1 over facets F. Facets are nonempty, so this is ≥ 0.
    pub fn dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap() - 1
    }

    pub fn is_pure(&self) -> bool {
        let s = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == s)
    }

    pub fn is_facet(&self, face: &[usize]) -> bool {
        self.facets
            .binary_search_by(|f| f.as_slice().cmp(face))
            .is_ok()
    }

    /// Vertices that lie in at least one facet.
    pub fn supported_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n + 1];
        for f in &self.facets {
            for &v in f {
                seen[v] = true;
            }
        }
        (1..=self.n).filter(|&v| seen[v]).collect()
    }

    /// The complex whose facets are the complements `{1..n} \ F`.
    ///
    /// Applying it twice gives back the original complex.
    pub fn dual(&self) -> Result<Self, ComplexError> {
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let comp: Vec<usize> = (1..=self.n).filter(|v| !f.contains(v)).collect();
            if comp.is_empty() {
                return Err(ComplexError::FullFacet);
            }
            facets.push(comp);
        }
        facets.sort();
        facets.dedup();
        Ok(SimplicialComplex { n: self.n, facets })
    }

    fn exchange_ok(&self, f: &[usize], g: &[usize], i: usize, symmetric: bool) -> bool {
        g.iter().any(|&j| {
            let fij = swap_vertex(f, i, j);
            if !self.is_facet(&fij) {
                return false;
            }
            if symmetric {
                let gji = swap_vertex(g, j, i);
                self.is_facet(&gji)
            } else {
                true
            }
        })
    }

    /// Brute-force facet exchange check over all ordered pairs of facets.
    ///
    /// This is the ground-truth side of the verification pipeline, so it stays
    /// a plain quadratic scan with no matroid-theory shortcuts.
    pub fn is_matroid(&self) -> bool {
        self.find_exchange_violation().is_none()
    }

    /// Symmetric variant: some `j` makes both `(F\{i})∪{j}` and `(G\{j})∪{i}` facets.
    pub fn check_symmetric_exchange(&self) -> bool {
        self.facets.iter().all(|f| {
            self.facets
                .iter()
                .all(|g| f == g || f.iter().all(|&i| self.exchange_ok(f, g, i, true)))
        })
    }

    /// First `(F, G, i)` in canonical order for which the exchange fails,
    /// or `None` when the complex is a matroid.
    pub fn find_exchange_violation(&self) -> Option<ExchangeViolation> {
        for f in &self.facets {
            for g in &self.facets {
                if f == g {
                    continue;
                }
                for &i in f {
                    if !self.exchange_ok(f, g, i, false) {
                        return Some(ExchangeViolation {
                            f: f.clone(),
                            g: g.clone(),
                            i,
                        });
                    }
                }
            }
        }
        None
    }

    /// `(dim K[Δ], multiplicity, pure)`: the Krull dimension `dim Δ + 1` of the
    /// face ring, the number of top-dimensional facets (which equals the
    /// multiplicity of `K[Δ]` when the complex is pure), and the purity flag.
    pub fn multiplicity_and_dim(&self) -> (usize, usize, bool) {
        let top = self.dim() + 1;
        let mult = self.facets.iter().filter(|f| f.len() == top).count();
        (top, mult, self.is_pure())
    }

    /// All faces, the empty face included, as sorted vertex lists.
    pub fn all_faces(&self) -> BTreeSet<Vec<usize>> {
        let mut faces = BTreeSet::new();
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                let face: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| mask >> t & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
            }
        }
        faces
    }

    /// Is `face` a face of the complex (a subset of some facet)?
    pub fn is_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dim() + 2];
        for face in self.all_faces() {
            counts[face.len()] += 1;
        }
        FVector { counts }
    }
}

/// `(face \ {i}) ∪ {j}` as a sorted vertex list. If `j` already lies in
/// `face \ {i}` the result is just `face \ {i}`.
fn swap_vertex(face: &[usize], i: usize, j: usize) -> Vec<usize> {
    let mut out: Vec<usize> = face.iter().copied().filter(|&v| v != i).collect();
    if let Err(pos) = out.binary_search(&j) {
        out.insert(pos, j);
    }
    out
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}
