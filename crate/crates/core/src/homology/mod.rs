//! Exact homological invariants of monomial ideals.
//!
//! Multigraded Betti numbers are computed from the reduced homology of the
//! upper Koszul subcomplexes at the multidegrees of the lcm lattice of the
//! generators; every other multidegree contributes nothing. Projective
//! dimension falls out as the top nonvanishing index, depth follows from
//! Auslander-Buchsbaum, and the Krull dimension comes from the minimal
//! primes of the radical, independently of the homological route.

mod linalg;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{Monomial, MonomialIdeal};

/// Betti computations visiting more lcm-lattice points than this abort.
pub const DEFAULT_LATTICE_CAP: usize = 50_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("multidegree lies outside the lcm lattice bound of the generators")]
    DegreeOutOfLattice,
    #[error("face set is not downward closed")]
    NotDownwardClosed,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("lcm lattice exceeded the cap of {cap} multidegrees")]
    CapacityExceeded { cap: usize },
    #[error("characteristic {p} is not 0 or a prime")]
    InvalidCharacteristic { p: u32 },
}

/// An exact coefficient field: the rationals or a prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct CoefficientField {
    characteristic: u32,
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField { characteristic: 0 }
    }

    pub fn prime_field(p: u32) -> Result<Self, HomologyError> {
        if p < 2
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(HomologyError::InvalidCharacteristic { p });
        }
        Ok(CoefficientField { characteristic: p })
    }

    pub fn of_characteristic(p: u32) -> Result<Self, HomologyError> {
        if p == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime_field(p)
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    fn rank(&self, matrix: &[Vec<i64>]) -> usize {
        if matrix.is_empty() || matrix[0].is_empty() {
            return 0;
        }
        match self.characteristic {
            0 => linalg::rank_over_rationals(matrix),
            p => linalg::rank_mod_p(matrix, p),
        }
    }
}

impl TryFrom<u32> for CoefficientField {
    type Error = HomologyError;
    fn try_from(p: u32) -> Result<Self, HomologyError> {
        Self::of_characteristic(p)
    }
}

impl From<CoefficientField> for u32 {
    fn from(f: CoefficientField) -> u32 {
        f.characteristic
    }
}

/// A finite family of faces (subsets of some vertex set), possibly void.
/// Valid inputs to homology are downward closed, the empty face included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: BTreeSet<Vec<usize>>,
}

impl FaceSet {
    pub fn new<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let faces = faces
            .into_iter()
            .map(|f| {
                let set: BTreeSet<usize> = f.into_iter().collect();
                set.into_iter().collect()
            })
            .collect();
        FaceSet { faces }
    }

    /// The complex with no faces at all (not even the empty face).
    pub fn void() -> Self {
        FaceSet {
            faces: BTreeSet::new(),
        }
    }

    /// All faces of a simplicial complex, the empty face included.
    pub fn of_complex(cx: &crate::complex::SimplicialComplex) -> Self {
        FaceSet {
            faces: cx.all_faces(),
        }
    }

    pub fn faces(&self) -> &BTreeSet<Vec<usize>> {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: BTreeSet<usize> = BTreeSet::new();
        for f in &self.faces {
            vs.extend(f.iter().copied());
        }
        vs.into_iter().collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..f.len()).all(|skip| {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != skip)
                    .map(|(_, &v)| v)
                    .collect();
                self.faces.contains(&sub)
            })
        })
    }
}

/// Multigraded Betti numbers `β_{i,a}` of an ideal over a fixed field.
/// Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    characteristic: u32,
    entries: BTreeMap<(usize, Monomial), u64>,
}

/// One row of the serialized form of a [`BettiTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Vec<u32>,
    pub rank: u64,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Monomial), &u64)> {
        self.entries.iter()
    }

    pub fn rank(&self, i: usize, degree: &Monomial) -> u64 {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &r)| r)
            .sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        let max = self.max_index();
        (0..=max).map(|i| self.total(i)).collect()
    }

    /// Largest homological index with a nonzero entry. The table always has
    /// `β_0` entries, one per minimal generator.
    pub fn max_index(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn to_entry_list(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|((i, a), &rank)| BettiEntry {
                i: *i,
                degree: a.0.clone(),
                rank,
            })
            .collect()
    }
}

/// Depth, projective dimension, and the Cohen-Macaulay verdict of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub label: String,
    pub characteristic: u32,
    pub projective_dimension: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub cohen_macaulay: bool,
}

/// The upper Koszul subcomplex of `I` at multidegree `a`: the faces are the
/// subsets `b` of `support(a)` with `x^{a-b}` in `I`. Downward closed because
/// membership is monotone.
pub fn koszul_subcomplex(ideal: &MonomialIdeal, a: &Monomial) -> Result<FaceSet, HomologyError> {
    if a.len() != ideal.n() {
        return Err(HomologyError::DegreeOutOfLattice);
    }
    if ideal.is_zero() {
        return Ok(FaceSet::void());
    }
    let support = a.support();
    if ideal.is_unit() {
        let mut faces = BTreeSet::new();
        for mask in 0u64..(1 << support.len()) {
            faces.insert(expand_mask(mask, &support));
        }
        return Ok(FaceSet { faces });
    }
    let bound = ideal
        .generators()
        .iter()
        .fold(Monomial(vec![0; ideal.n()]), |acc, g| acc.lcm(g));
    if !a.divides(&bound) {
        return Err(HomologyError::DegreeOutOfLattice);
    }
    let masks = koszul_face_masks(ideal, a, &support);
    let faces = masks
        .into_iter()
        .map(|m| expand_mask(m, &support))
        .collect();
    Ok(FaceSet { faces })
}

fn expand_mask(mask: u64, support: &[usize]) -> Vec<usize> {
    support
        .iter()
        .enumerate()
        .filter(|(t, _)| mask >> t & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// Face masks of the upper Koszul subcomplex, found by breadth-first search
/// upward from the empty face; non-faces never spawn candidates, which is
/// sound because membership is monotone.
fn koszul_face_masks(ideal: &MonomialIdeal, a: &Monomial, support: &[usize]) -> Vec<u64> {
    // b is a face iff some generator g ≤ a avoids every coordinate of b where
    // g equals a; record that critical set per generator as a bitmask
    let mut critical: Vec<u64> = Vec::new();
    for g in ideal.generators() {
        if !g.divides(a) {
            continue;
        }
        let mut mask = 0u64;
        for (t, &v) in support.iter().enumerate() {
            if g.0[v - 1] == a.0[v - 1] {
                mask |= 1 << t;
            }
        }
        critical.push(mask);
    }
    let is_face = |b: u64| critical.iter().any(|&c| b & c == 0);
    if !is_face(0) {
        return Vec::new();
    }
    let mut found: HashSet<u64> = HashSet::new();
    found.insert(0);
    let mut frontier = vec![0u64];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &b in &frontier {
            for t in 0..support.len() {
                let cand = b | 1 << t;
                if cand != b && !found.contains(&cand) && is_face(cand) {
                    found.insert(cand);
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    let mut masks: Vec<u64> = found.into_iter().collect();
    masks.sort_unstable();
    masks
}

/// Ranks of reduced simplicial homology over the field. Index `j` of the
/// result holds the rank in degree `j - 1`, so a nonvoid complex consisting
/// only of the empty face reports rank 1 at index 0. The void complex has no
/// homology at all.
pub fn reduced_homology_ranks(
    faces: &FaceSet,
    field: CoefficientField,
) -> Result<Vec<u64>, HomologyError> {
    if faces.is_void() {
        return Ok(Vec::new());
    }
    if !faces.is_downward_closed() {
        return Err(HomologyError::NotDownwardClosed);
    }
    let vertices = faces.vertices();
    let index_of: HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let masks: Vec<u64> = faces
        .faces
        .iter()
        .map(|f| f.iter().fold(0u64, |m, v| m | 1 << index_of[v]))
        .collect();
    Ok(homology_ranks_from_masks(&masks, vertices.len(), field))
}

fn homology_ranks_from_masks(masks: &[u64], s: usize, field: CoefficientField) -> Vec<u64> {
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); s + 1];
    for &m in masks {
        by_size[m.count_ones() as usize].push(m);
    }
    let top = (0..=s).rev().find(|&t| !by_size[t].is_empty()).unwrap_or(0);
    // boundary_rank[t] = rank of ∂ from faces of size t to faces of size t-1
    let mut boundary_rank = vec![0usize; top + 2];
    for t in 1..=top {
        boundary_rank[t] = field.rank(&boundary_matrix(&by_size[t - 1], &by_size[t]));
    }
    let mut ranks = vec![0u64; top + 1];
    for t in 0..=top {
        let dim = by_size[t].len();
        let kernel = dim - boundary_rank[t];
        ranks[t] = (kernel - boundary_rank[t + 1]) as u64;
    }
    ranks
}

fn boundary_matrix(rows_faces: &[u64], cols_faces: &[u64]) -> Vec<Vec<i64>> {
    let row_index: HashMap<u64, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut matrix = vec![vec![0i64; cols_faces.len()]; rows_faces.len()];
    for (col, &face) in cols_faces.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = face;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let sub = face & !bit;
            matrix[row_index[&sub]][col] = sign;
            sign = -sign;
            rest &= !bit;
        }
    }
    matrix
}

/// Multigraded Betti numbers `β_{i,a}(I)` via upper Koszul subcomplexes at
/// the multidegrees of the lcm lattice.
pub fn betti_numbers(
    ideal: &MonomialIdeal,
    field: CoefficientField,
) -> Result<BettiTable, HomologyError> {
    betti_numbers_capped(ideal, field, DEFAULT_LATTICE_CAP)
}

pub fn betti_numbers_capped(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    cap: usize,
) -> Result<BettiTable, HomologyError> {
    if ideal.is_zero() {
        return Err(HomologyError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(HomologyError::UnitIdeal);
    }
    let lattice = lcm_lattice(ideal, cap)?;
    let per_degree: Vec<Vec<(usize, Monomial, u64)>> = lattice
        .par_iter()
        .map(|a| {
            let support = a.support();
            let masks = koszul_face_masks(ideal, a, &support);
            if masks.is_empty() || is_cone(&masks, support.len()) {
                return Vec::new();
            }
            let ranks = homology_ranks_from_masks(&masks, support.len(), field);
            ranks
                .into_iter()
                .enumerate()
                .filter(|(_, r)| *r > 0)
                .map(|(i, r)| (i, a.clone(), r))
                .collect()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for list in per_degree {
        for (i, a, r) in list {
            entries.insert((i, a), r);
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        characteristic: field.characteristic(),
        entries,
    })
}

/// Every homology group of a cone vanishes; most lattice points are cones,
/// so this check carries the bulk of the speedup.
fn is_cone(masks: &[u64], s: usize) -> bool {
    let set: HashSet<u64> = masks.iter().copied().collect();
    'apex: for t in 0..s {
        let bit = 1u64 << t;
        for &m in masks {
            if m & bit == 0 && !set.contains(&(m | bit)) {
                continue 'apex;
            }
        }
        return true;
    }
    false
}

/// All distinct joins of nonempty subsets of the generators.
fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>, HomologyError> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let join = m.lcm(g);
                if !seen.contains(&join) {
                    if seen.len() >= cap {
                        return Err(HomologyError::CapacityExceeded { cap });
                    }
                    seen.insert(join.clone());
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut lattice: Vec<Monomial> = seen.into_iter().collect();
    lattice.sort();
    Ok(lattice)
}

/// Krull dimension of `S/I`: `n` minus the least support size over the
/// minimal primes of the radical, i.e. `n` minus the minimum transversal of
/// the generator supports. Exact and independent of the Betti route.
pub fn krull_dimension(ideal: &MonomialIdeal) -> Result<usize, HomologyError> {
    if ideal.is_unit() {
        return Err(HomologyError::UnitIdeal);
    }
    let n = ideal.n();
    if ideal.is_zero() {
        return Ok(n);
    }
    assert!(n <= 24, "transversal scan is desk-scale only");
    let radical = ideal.radical();
    let supports: Vec<u32> = radical
        .generators()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |m, v| m | 1 << (v - 1)))
        .collect();
    let mut best = n as u32;
    for mask in 0u32..1 << n {
        if mask.count_ones() >= best {
            continue;
        }
        if supports.iter().all(|&s| s & mask != 0) {
            best = mask.count_ones();
        }
    }
    Ok(n - best as usize)
}

/// Projective dimension of `S/I` from the top nonvanishing Betti index of
/// `I`, depth by Auslander-Buchsbaum, Krull dimension from the radical, and
/// the Cohen-Macaulay verdict `depth == dim`.
pub fn depth_and_cm(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    label: impl Into<String>,
) -> Result<DepthReport, HomologyError> {
    depth_and_cm_capped(ideal, field, label, DEFAULT_LATTICE_CAP)
}

pub fn depth_and_cm_capped(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    label: impl Into<String>,
    cap: usize,
) -> Result<DepthReport, HomologyError> {
    let betti = betti_numbers_capped(ideal, field, cap)?;
    let pd = betti.max_index() + 1;
    let n = ideal.n();
    let depth = n - pd;
    let krull_dim = krull_dimension(ideal)?;
    Ok(DepthReport {
        label: label.into(),
        characteristic: field.characteristic(),
        projective_dimension: pd,
        depth,
        krull_dim,
        cohen_macaulay: depth == krull_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::ideal::{cover_ideal, stanley_reisner_ideal, symbolic_power_from_primes};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| Monomial(g.to_vec()))).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::new(
            6,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 5],
                vec![1, 2, 6],
                vec![1, 4, 5],
                vec![1, 4, 6],
                vec![2, 3, 4],
                vec![2, 4, 5],
                vec![2, 5, 6],
                vec![3, 4, 6],
                vec![3, 5, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn coefficient_field_validation() {
        assert_eq!(CoefficientField::rationals().characteristic(), 0);
        assert_eq!(
            CoefficientField::prime_field(7).unwrap().characteristic(),
            7
        );
        assert_eq!(
            CoefficientField::prime_field(6).unwrap_err(),
            HomologyError::InvalidCharacteristic { p: 6 }
        );
        assert_eq!(
            CoefficientField::prime_field(1).unwrap_err(),
            HomologyError::InvalidCharacteristic { p: 1 }
        );
    }

    #[test]
    fn koszul_examples() {
        let principal = ideal(2, &[&[1, 1]]);
        let faces = koszul_subcomplex(&principal, &Monomial(vec![1, 1])).unwrap();
        assert_eq!(faces.faces().len(), 1);
        assert!(faces.faces().contains(&vec![]));

        let unit = MonomialIdeal::unit(3);
        let full = koszul_subcomplex(&unit, &Monomial(vec![2, 0, 1])).unwrap();
        assert_eq!(full.faces().len(), 4); // all subsets of {1, 3}

        let zero = MonomialIdeal::zero(2);
        assert!(koszul_subcomplex(&zero, &Monomial(vec![1, 0]))
            .unwrap()
            .is_void());

        assert_eq!(
            koszul_subcomplex(&principal, &Monomial(vec![2, 1])).unwrap_err(),
            HomologyError::DegreeOutOfLattice
        );
    }

    #[test]
    fn homology_of_circle_and_points() {
        let circle = FaceSet::new(vec![
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ]);
        assert_eq!(
            reduced_homology_ranks(&circle, CoefficientField::rationals()).unwrap(),
            vec![0, 0, 1]
        );

        let two_points = FaceSet::new(vec![vec![], vec![1], vec![2]]);
        assert_eq!(
            reduced_homology_ranks(&two_points, CoefficientField::rationals()).unwrap(),
            vec![0, 1]
        );

        let empty_only = FaceSet::new(vec![Vec::<usize>::new()]);
        assert_eq!(
            reduced_homology_ranks(&empty_only, CoefficientField::rationals()).unwrap(),
            vec![1]
        );

        assert!(
            reduced_homology_ranks(&FaceSet::void(), CoefficientField::rationals())
                .unwrap()
                .is_empty()
        );

        let not_closed = FaceSet::new(vec![vec![1, 2]]);
        assert_eq!(
            reduced_homology_ranks(&not_closed, CoefficientField::rationals()).unwrap_err(),
            HomologyError::NotDownwardClosed
        );
    }

    #[test]
    fn homology_of_projective_plane_depends_on_characteristic() {
        let faces = FaceSet::of_complex(&rp2());
        let over_q = reduced_homology_ranks(&faces, CoefficientField::rationals()).unwrap();
        assert_eq!(over_q, vec![0, 0, 0, 0]);
        let over_f2 =
            reduced_homology_ranks(&faces, CoefficientField::prime_field(2).unwrap()).unwrap();
        assert_eq!(over_f2, vec![0, 0, 1, 1]);
    }

    #[test]
    fn betti_examples() {
        let q = CoefficientField::rationals();

        let principal = ideal(2, &[&[1, 1]]);
        let table = betti_numbers(&principal, q).unwrap();
        assert_eq!(table.totals(), vec![1]);

        let two_vars = ideal(2, &[&[1, 0], &[0, 1]]);
        let table = betti_numbers(&two_vars, q).unwrap();
        assert_eq!(table.totals(), vec![2, 1]);
        assert_eq!(table.rank(1, &Monomial(vec![1, 1])), 1);

        let triangle = SimplicialComplex::cycle(3).unwrap();
        let j = cover_ideal(&triangle);
        let table = betti_numbers(&j, q).unwrap();
        assert_eq!(table.totals(), vec![3, 2]);

        assert_eq!(
            betti_numbers(&MonomialIdeal::zero(2), q).unwrap_err(),
            HomologyError::ZeroIdeal
        );
        assert_eq!(
            betti_numbers(&MonomialIdeal::unit(2), q).unwrap_err(),
            HomologyError::UnitIdeal
        );
    }

    /// Betti totals from the Taylor complex: for each multidegree, homology
    /// of the subcomplex of generator subsets whose lcm is that multidegree.
    /// A wholly different algorithm from the upper-Koszul route.
    fn taylor_betti_totals(ideal: &MonomialIdeal, field: CoefficientField) -> Vec<u64> {
        let gens = ideal.generators();
        let r = gens.len();
        assert!(r <= 12, "Taylor oracle is for small ideals");
        let lcm_of = |mask: u32| -> Monomial {
            let mut acc = Monomial(vec![0; ideal.n()]);
            for t in 0..r {
                if mask >> t & 1 == 1 {
                    acc = acc.lcm(&gens[t]);
                }
            }
            acc
        };
        let mut by_degree: HashMap<Monomial, Vec<u32>> = HashMap::new();
        for mask in 1u32..1 << r {
            by_degree.entry(lcm_of(mask)).or_default().push(mask);
        }
        let mut totals: Vec<u64> = Vec::new();
        for (degree, subsets) in by_degree {
            let members: HashSet<u32> = subsets.iter().copied().collect();
            let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
            for &m in &subsets {
                by_size[m.count_ones() as usize].push(m);
            }
            for level in &mut by_size {
                level.sort_unstable();
            }
            // rank of the differential from size-t subsets to size-(t-1)
            // subsets, keeping only faces whose lcm equals the multidegree
            let mut boundary_rank = vec![0usize; r + 2];
            for t in 2..=r {
                if by_size[t].is_empty() || by_size[t - 1].is_empty() {
                    continue;
                }
                let row_index: HashMap<u32, usize> = by_size[t - 1]
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (m, i))
                    .collect();
                let mut matrix = vec![vec![0i64; by_size[t].len()]; by_size[t - 1].len()];
                for (col, &subset) in by_size[t].iter().enumerate() {
                    let mut sign = 1i64;
                    for t2 in 0..r {
                        if subset >> t2 & 1 == 0 {
                            continue;
                        }
                        let sub = subset & !(1 << t2);
                        if lcm_of(sub) == degree && members.contains(&sub) {
                            matrix[row_index[&sub]][col] = sign;
                        }
                        sign = -sign;
                    }
                }
                boundary_rank[t] = field.rank(&matrix);
            }
            for t in 1..=r {
                let dim = by_size[t].len();
                if dim == 0 {
                    continue;
                }
                let h = dim - boundary_rank[t] - boundary_rank[t + 1];
                let i = t - 1;
                if totals.len() <= i {
                    totals.resize(i + 1, 0);
                }
                totals[i] += h as u64;
            }
        }
        while totals.last() == Some(&0) {
            totals.pop();
        }
        totals
    }

    #[test]
    fn betti_agrees_with_taylor_oracle() {
        let q = CoefficientField::rationals();
        let f2 = CoefficientField::prime_field(2).unwrap();
        let triangle = SimplicialComplex::cycle(3).unwrap();
        let samples = vec![
            ideal(2, &[&[1, 0], &[0, 1]]),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 1]]),
            symbolic_power_from_primes(triangle.facets(), 2, 3).unwrap(),
            ideal(
                4,
                &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
            ),
            ideal(
                3,
                &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[0, 3, 0], &[0, 0, 2]],
            ),
        ];
        for i in samples {
            for field in [q, f2] {
                assert_eq!(
                    betti_numbers(&i, field).unwrap().totals(),
                    taylor_betti_totals(&i, field),
                    "ideal {i:?} char {}",
                    field.characteristic()
                );
            }
        }
    }

    #[test]
    fn depth_examples() {
        let q = CoefficientField::rationals();

        let hypersurface = ideal(2, &[&[1, 1]]);
        let report = depth_and_cm(&hypersurface, q, "xy").unwrap();
        assert_eq!(
            (report.projective_dimension, report.depth, report.krull_dim),
            (1, 1, 1)
        );
        assert!(report.cohen_macaulay);

        let triangle = SimplicialComplex::cycle(3).unwrap();
        let report = depth_and_cm(&cover_ideal(&triangle), q, "J(C3)").unwrap();
        assert_eq!((report.depth, report.krull_dim), (1, 1));
        assert!(report.cohen_macaulay);
    }

    #[test]
    fn projective_plane_is_cm_exactly_away_from_char_two() {
        let sr = stanley_reisner_ideal(&rp2());
        let over_q = depth_and_cm(&sr, CoefficientField::rationals(), "rp2").unwrap();
        assert_eq!((over_q.depth, over_q.krull_dim), (3, 3));
        assert!(over_q.cohen_macaulay);

        let over_f2 = depth_and_cm(&sr, CoefficientField::prime_field(2).unwrap(), "rp2").unwrap();
        assert_eq!((over_f2.depth, over_f2.krull_dim), (2, 3));
        assert!(!over_f2.cohen_macaulay);
    }

    #[test]
    fn krull_dimension_examples() {
        let c5 = SimplicialComplex::cycle(5).unwrap();
        assert_eq!(krull_dimension(&stanley_reisner_ideal(&c5)).unwrap(), 2);
        assert_eq!(krull_dimension(&cover_ideal(&c5)).unwrap(), 3);

        let primes = vec![vec![1, 2], vec![1, 3], vec![2, 3]];
        let cubed = symbolic_power_from_primes(&primes, 3, 3).unwrap();
        assert_eq!(krull_dimension(&cubed).unwrap(), 1);

        assert_eq!(krull_dimension(&MonomialIdeal::zero(4)).unwrap(), 4);
        assert_eq!(
            krull_dimension(&MonomialIdeal::unit(4)).unwrap_err(),
            HomologyError::UnitIdeal
        );
    }

    #[test]
    fn krull_dimension_is_radical_invariant() {
        let prime_lists = [
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
            vec![vec![1, 2, 3], vec![3, 4]],
        ];
        for primes in prime_lists {
            let n = 4;
            let base =
                krull_dimension(&symbolic_power_from_primes(&primes, 1, n).unwrap()).unwrap();
            for m in 2..=4 {
                let power = symbolic_power_from_primes(&primes, m, n).unwrap();
                assert_eq!(krull_dimension(&power).unwrap(), base);
            }
        }
    }

    #[test]
    fn betti_tables_agree_across_fields_for_torsion_free_ideals() {
        // shifted-style square-free samples; the projective plane above is
        // the deliberate disagreement witness
        let q = CoefficientField::rationals();
        let f2 = CoefficientField::prime_field(2).unwrap();
        let samples = vec![
            stanley_reisner_ideal(&SimplicialComplex::skeleton(5, 1).unwrap()),
            stanley_reisner_ideal(&SimplicialComplex::skeleton(5, 2).unwrap()),
            stanley_reisner_ideal(&SimplicialComplex::cycle(5).unwrap()),
            cover_ideal(&SimplicialComplex::cycle(6).unwrap()),
        ];
        for ideal in samples {
            let a = betti_numbers(&ideal, q).unwrap();
            let b = betti_numbers(&ideal, f2).unwrap();
            let a_entries: Vec<_> = a.entries().map(|(k, v)| (k.clone(), *v)).collect();
            let b_entries: Vec<_> = b.entries().map(|(k, v)| (k.clone(), *v)).collect();
            assert_eq!(a_entries, b_entries, "{ideal:?}");
        }
    }

    #[test]
    fn depth_is_invariant_under_relabeling() {
        let q = CoefficientField::rationals();
        let c5 = SimplicialComplex::cycle(5).unwrap();
        // rotate labels by 2: an automorphism-free relabeling of the same cycle
        let relabeled = SimplicialComplex::new(
            5,
            c5.facets()
                .iter()
                .map(|f| f.iter().map(|&v| (v + 1) % 5 + 1).collect::<Vec<_>>()),
        )
        .unwrap();
        let a = depth_and_cm(&cover_ideal(&c5), q, "a").unwrap();
        let b = depth_and_cm(&cover_ideal(&relabeled), q, "b").unwrap();
        assert_eq!(a.depth, b.depth);
        assert_eq!(a.krull_dim, b.krull_dim);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn betti_totals_match_taylor_oracle(
                gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..5),
            ) {
                let ideal =
                    MonomialIdeal::minimalize(3, gens.into_iter().map(Monomial)).unwrap();
                prop_assume!(!ideal.is_unit());
                for field in
                    [CoefficientField::rationals(), CoefficientField::prime_field(2).unwrap()]
                {
                    let table = betti_numbers(&ideal, field).unwrap();
                    prop_assert_eq!(table.totals(), taylor_betti_totals(&ideal, field));
                }
            }

            #[test]
            fn auslander_buchsbaum_bookkeeping(
                gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..5),
            ) {
                let ideal =
                    MonomialIdeal::minimalize(4, gens.into_iter().map(Monomial)).unwrap();
                prop_assume!(!ideal.is_unit());
                let report =
                    depth_and_cm(&ideal, CoefficientField::rationals(), "prop").unwrap();
                prop_assert_eq!(report.depth + report.projective_dimension, 4);
                prop_assert!(report.depth <= report.krull_dim);
                prop_assert!(report.krull_dim <= 4);
            }
        }
    }
}
