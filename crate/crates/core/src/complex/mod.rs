//! Simplicial complexes stored as explicit face families over a labelled universe.

mod homology;
mod identities;

use std::collections::HashSet;

use num_traits::Zero;

use crate::arith::{binom, Int};
use crate::error::{MatxError, Result};
use crate::matroid::Matroid;
use crate::set::{bits_of, full_mask, ElementSet, MAX_ELEMENTS};

pub use homology::{cm_level, is_cohen_macaulay, is_k_cm, reduced_homology, BettiVector, KcmLimits};
pub use identities::{deletion_sum_check, short_h, DeletionSumReport, ShortH};

/// Default bound on the number of stored faces.
pub const DEFAULT_FACE_CAP: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// All faces, sorted by (cardinality, bitmask).
    faces: Vec<u32>,
    face_set: HashSet<u32>,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`; fails past [`DEFAULT_FACE_CAP`] faces.
    pub fn from_facets(labels: Vec<String>, facets: &[u32]) -> Result<Self> {
        Self::from_facets_capped(labels, facets, DEFAULT_FACE_CAP)
    }

    pub fn from_facets_capped(labels: Vec<String>, facets: &[u32], cap: usize) -> Result<Self> {
        check_universe(&labels, facets)?;
        if facets.is_empty() {
            return Err(MatxError::VoidComplex);
        }
        let mut face_set: HashSet<u32> = HashSet::new();
        let mut stack: Vec<u32> = facets.to_vec();
        while let Some(f) = stack.pop() {
            if !face_set.insert(f) {
                continue;
            }
            if face_set.len() > cap {
                return Err(MatxError::TooManyFaces(face_set.len()));
            }
            for e in bits_of(f) {
                let g = f & !(1 << e);
                if !face_set.contains(&g) {
                    stack.push(g);
                }
            }
        }
        Ok(Self::assemble(labels, face_set))
    }

    /// From a complete face list, which must be downward closed.
    pub fn from_faces(labels: Vec<String>, faces: &[u32]) -> Result<Self> {
        check_universe(&labels, faces)?;
        if faces.is_empty() {
            return Err(MatxError::VoidComplex);
        }
        let face_set: HashSet<u32> = faces.iter().copied().collect();
        for &f in &face_set {
            for e in bits_of(f) {
                if !face_set.contains(&(f & !(1 << e))) {
                    return Err(MatxError::NotDownwardClosed(bits_of(f).map(|i| labels[i].clone()).collect()));
                }
            }
        }
        Ok(Self::assemble(labels, face_set))
    }

    /// From named facets; the universe is `vertices`.
    pub fn from_named_facets<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut m = 0u32;
            for v in facet {
                let i = labels
                    .iter()
                    .position(|l| l == v.as_ref())
                    .ok_or_else(|| MatxError::UnknownLabel(v.as_ref().to_string()))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Self::from_facets(labels, &masks)
    }

    fn assemble(labels: Vec<String>, face_set: HashSet<u32>) -> Self {
        let mut faces: Vec<u32> = face_set.iter().copied().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        let facets = faces
            .iter()
            .copied()
            .filter(|&f| {
                let free = full_mask(labels.len()) & !f;
                bits_of(free).all(|e| !face_set.contains(&(f | 1 << e)))
            })
            .collect();
        Self { labels, faces, face_set, facets }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: u32) -> bool {
        self.face_set.contains(&face)
    }

    pub fn vertex_mask(&self) -> u32 {
        self.faces.iter().filter(|f| f.count_ones() == 1).fold(0, |acc, f| acc | f)
    }

    pub fn vertices(&self) -> ElementSet {
        ElementSet::from_bits(self.vertex_mask(), self.labels.len())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_mask().count_ones() as usize
    }

    /// Largest face cardinality `r`; the dimension is `r - 1`.
    pub fn rank(&self) -> usize {
        self.faces.last().map_or(0, |f| f.count_ones() as usize)
    }

    pub fn dim(&self) -> i64 {
        self.rank() as i64 - 1
    }

    pub fn is_pure(&self) -> bool {
        let r = self.rank() as u32;
        self.facets.iter().all(|f| f.count_ones() == r)
    }

    /// `lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`, on the same universe.
    pub fn link(&self, face: u32) -> SimplicialComplex {
        let faces: HashSet<u32> = self
            .faces
            .iter()
            .filter(|&&g| g & face == face)
            .map(|&g| g & !face)
            .collect();
        Self::assemble(self.labels.clone(), faces)
    }

    /// `Δ - A`: drops every face meeting `A`.
    pub fn delete_vertices(&self, set: u32) -> SimplicialComplex {
        let faces: HashSet<u32> = self.faces.iter().copied().filter(|g| g & set == 0).collect();
        Self::assemble(self.labels.clone(), faces)
    }

    /// `f_0..f_r`, with `f_i` the number of faces of cardinality `i`.
    pub fn f_vector(&self) -> Vec<Int> {
        let mut f = vec![0u64; self.rank() + 1];
        for &face in &self.faces {
            f[face.count_ones() as usize] += 1;
        }
        f.into_iter().map(Int::from).collect()
    }

    pub fn h_vector(&self) -> Vec<Int> {
        h_from_f(&self.f_vector(), self.rank())
    }

    pub fn names(&self, mask: u32) -> Vec<String> {
        bits_of(mask).map(|i| self.labels[i].clone()).collect()
    }
}

fn check_universe(labels: &[String], masks: &[u32]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(MatxError::TooLarge(labels.len()));
    }
    if let Some(m) = masks.iter().find(|&&m| m & !full_mask(labels.len()) != 0) {
        return Err(MatxError::Input(format!("face {m:#x} outside the vertex universe")));
    }
    Ok(())
}

/// `h_i = Σ_{j≤i} (-1)^{i-j} C(r-j, r-i) f_j` for `0 ≤ i ≤ r`.
pub fn h_from_f(f: &[Int], r: usize) -> Vec<Int> {
    let r = r as i64;
    (0..=r)
        .map(|i| {
            (0..=i).fold(Int::zero(), |acc, j| {
                let term = binom(r - j, r - i) * crate::arith::at(f, j);
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// `f_j = Σ_{i≤j} C(r-i, r-j) h_i` for `0 ≤ j ≤ r`.
pub fn f_from_h(h: &[Int], r: usize) -> Vec<Int> {
    let r = r as i64;
    (0..=r)
        .map(|j| (0..=j).fold(Int::zero(), |acc, i| acc + binom(r - i, r - j) * crate::arith::at(h, i)))
        .collect()
}

/// `Δ(M)`: the independent sets of `M`. Loops are not vertices.
pub fn independence_complex(m: &Matroid) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facets(m.labels().to_vec(), m.basis_masks())
}

/// `Δ^BC(M, ω)`: sets containing no broken circuit, where a broken circuit is a circuit
/// minus its `ω`-least element. `ordering` lists element indices from least to greatest;
/// `None` means label order.
pub fn broken_circuit_complex(m: &Matroid, ordering: Option<&[usize]>) -> Result<SimplicialComplex> {
    if m.loop_mask() != 0 {
        return Err(MatxError::HasLoops);
    }
    let n = m.n();
    let position: Vec<usize> = match ordering {
        None => (0..n).collect(),
        Some(order) => {
            let mut pos = vec![usize::MAX; n];
            if order.len() != n {
                return Err(MatxError::BadOrdering);
            }
            for (p, &e) in order.iter().enumerate() {
                if e >= n || pos[e] != usize::MAX {
                    return Err(MatxError::BadOrdering);
                }
                pos[e] = p;
            }
            pos
        }
    };
    let broken: Vec<u32> = m
        .circuit_masks()
        .into_iter()
        .map(|c| {
            let least = bits_of(c).min_by_key(|&e| position[e]).expect("circuits are nonempty");
            c & !(1 << least)
        })
        .collect();
    let indep = independence_complex(m)?;
    let faces: Vec<u32> =
        indep.faces.iter().copied().filter(|&s| broken.iter().all(|&bc| bc & !s != 0)).collect();
    SimplicialComplex::from_faces(m.labels().to_vec(), &faces)
}

/// [`broken_circuit_complex`] with the ordering given by labels.
pub fn broken_circuit_complex_by_labels<S: AsRef<str>>(m: &Matroid, order: &[S]) -> Result<SimplicialComplex> {
    let idx = order.iter().map(|l| m.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
    broken_circuit_complex(m, Some(&idx))
}
