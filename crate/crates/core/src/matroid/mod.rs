//! Finite matroids stored by their basis family.
//!
//! Elements are indexed `0..n` in label order and subsets are `u32` bitmasks, so
//! every construction is a pure function over small sorted vectors. Two matroids
//! compare equal exactly when their labels and basis families agree.

mod minors;
mod structure;

use std::collections::HashSet;
use std::fmt;

use crate::error::{MatxError, Result};
use crate::set::{bits_of, full_mask, k_subsets, ElementSet, MAX_ELEMENTS};

pub use minors::{parallel_connection, series_connection, PointedMatroid};
pub(crate) use minors::compact;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    labels: Vec<String>,
    bases: Vec<u32>,
    rank: usize,
}

impl Matroid {
    /// Builds a matroid from named bases, validating the exchange axiom exhaustively.
    pub fn from_bases<S: AsRef<str>>(labels: &[S], bases: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        check_labels(&labels)?;
        let mut masks = Vec::with_capacity(bases.len());
        for basis in bases {
            let mut mask = 0u32;
            for name in basis {
                let name = name.as_ref();
                let i = labels
                    .iter()
                    .position(|l| l == name)
                    .ok_or_else(|| MatxError::UnknownLabel(name.to_string()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Self::from_basis_masks(labels, masks)
    }

    /// Builds a matroid from basis bitmasks over `labels`, validating the exchange axiom.
    pub fn from_basis_masks(labels: Vec<String>, masks: Vec<u32>) -> Result<Self> {
        check_labels(&labels)?;
        if masks.is_empty() {
            return Err(MatxError::EmptyBases);
        }
        let n = labels.len();
        if let Some(&bad) = masks.iter().find(|&&m| m & !full_mask(n) != 0) {
            return Err(MatxError::Input(format!("basis mask {bad:#x} outside ground set")));
        }
        let r = masks[0].count_ones() as usize;
        if let Some(&other) = masks.iter().find(|m| m.count_ones() as usize != r) {
            return Err(MatxError::UnequalBases(r, other.count_ones() as usize));
        }
        let m = Self::from_masks_unchecked(labels, masks);
        m.check_exchange()?;
        Ok(m)
    }

    /// Sorts and deduplicates; callers guarantee the family is a matroid basis family.
    pub(crate) fn from_masks_unchecked(labels: Vec<String>, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(!masks.is_empty());
        let rank = masks[0].count_ones() as usize;
        Self { labels, bases: masks, rank }
    }

    /// `U_{r,n}` on labels `1..=n`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(n));
        }
        if r > n {
            return Err(MatxError::BadRank { r, n });
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Ok(Self::from_masks_unchecked(labels, k_subsets(n, r).collect()))
    }

    /// The matroid on zero elements (rank 0, single empty basis).
    pub fn empty() -> Self {
        Self::from_masks_unchecked(Vec::new(), vec![0])
    }

    /// Validates the basis exchange axiom. On failure reports the witness `(B1, B2, x)`.
    pub fn check_exchange(&self) -> Result<()> {
        let set: HashSet<u32> = self.bases.iter().copied().collect();
        let n = self.n();
        for &b1 in &self.bases {
            for x in bits_of(b1) {
                let without = b1 & !(1 << x);
                // y outside b1 with (b1 - x) + y a basis
                let mut exchange = 0u32;
                for y in bits_of(full_mask(n) & !b1) {
                    if set.contains(&(without | 1 << y)) {
                        exchange |= 1 << y;
                    }
                }
                for &b2 in &self.bases {
                    if b2 >> x & 1 == 0 && b2 & !b1 & exchange == 0 {
                        return Err(MatxError::NotAMatroid {
                            b1: self.names(b1),
                            b2: self.names(b2),
                            x: self.labels[x].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> impl Iterator<Item = ElementSet> + '_ {
        let n = self.n();
        self.bases.iter().map(move |&b| ElementSet::from_bits(b, n))
    }

    pub(crate) fn basis_masks(&self) -> &[u32] {
        &self.bases
    }

    pub(crate) fn ground_mask(&self) -> u32 {
        full_mask(self.n())
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatxError::UnknownLabel(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let idx = labels.iter().map(|l| self.index_of(l.as_ref())).collect::<Result<Vec<_>>>()?;
        ElementSet::from_indices(idx, self.n())
    }

    pub fn names(&self, mask: u32) -> Vec<String> {
        bits_of(mask).map(|i| self.labels[i].clone()).collect()
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.bases.binary_search(&set.bits()).is_ok()
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.bases.iter().any(|&b| set.bits() & !b == 0)
    }

    /// `r(A)`: the largest intersection of `A` with a basis.
    pub fn rank_of(&self, set: ElementSet) -> usize {
        self.rank_of_mask(set.bits())
    }

    pub(crate) fn rank_of_mask(&self, mask: u32) -> usize {
        let mut best = 0;
        for &b in &self.bases {
            best = best.max((b & mask).count_ones() as usize);
            if best == self.rank {
                break;
            }
        }
        best
    }

    /// Minimal dependent sets, sorted by bitmask.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let n = self.n();
        self.circuit_masks().into_iter().map(|c| ElementSet::from_bits(c, n)).collect()
    }

    /// Every circuit is the fundamental circuit of some element outside some basis.
    pub(crate) fn circuit_masks(&self) -> Vec<u32> {
        let set: HashSet<u32> = self.bases.iter().copied().collect();
        let mut out = HashSet::new();
        let ground = self.ground_mask();
        for &b in &self.bases {
            for e in bits_of(ground & !b) {
                let mut c = 1u32 << e;
                for f in bits_of(b) {
                    if set.contains(&((b & !(1 << f)) | 1 << e)) {
                        c |= 1 << f;
                    }
                }
                out.insert(c);
            }
        }
        let mut v: Vec<u32> = out.into_iter().collect();
        v.sort_unstable();
        v
    }

    pub fn cocircuits(&self) -> Vec<ElementSet> {
        self.dual().circuits()
    }

    /// Complements of cocircuits.
    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        let mut hs: Vec<ElementSet> = self.cocircuits().into_iter().map(ElementSet::complement).collect();
        hs.sort();
        hs
    }

    /// Independent sets counted by cardinality, `I_0..I_r`.
    pub fn independent_counts(&self) -> Vec<u64> {
        let mut seen: HashSet<u32> = HashSet::new();
        let mut level: Vec<u32> = self.bases.clone();
        let mut counts = vec![0u64; self.rank + 1];
        for size in (0..=self.rank).rev() {
            counts[size] = level.len() as u64;
            if size == 0 {
                break;
            }
            seen.clear();
            let mut next = Vec::new();
            for &s in &level {
                for e in bits_of(s) {
                    let t = s & !(1 << e);
                    if seen.insert(t) {
                        next.push(t);
                    }
                }
            }
            level = next;
        }
        counts
    }

    /// Rank of every subset, indexed by bitmask. Costs `O(2^n · n)`.
    pub(crate) fn rank_table(&self) -> Vec<u8> {
        let n = self.n();
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &b in &self.bases {
            indep[b as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] || s.count_ones() as usize >= self.rank {
                continue;
            }
            let mut free = !s & (size - 1);
            while free != 0 {
                let e = free & free.wrapping_neg();
                if indep[s | e] {
                    indep[s] = true;
                    break;
                }
                free &= free - 1;
            }
        }
        let mut rank = vec![0u8; size];
        for s in 1..size {
            if indep[s] {
                rank[s] = s.count_ones() as u8;
            } else {
                let mut best = 0;
                let mut rest = s;
                while rest != 0 {
                    let e = rest & rest.wrapping_neg();
                    best = best.max(rank[s & !e]);
                    rest &= rest - 1;
                }
                rank[s] = best;
            }
        }
        rank
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(MatxError::TooLarge(labels.len()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(MatxError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self.bases.iter().map(|&b| self.names(b).join("")).collect();
        write!(f, "Matroid(n={}, r={}, labels={:?}, bases=[{}])", self.n(), self.rank, self.labels, bases.join(","))
    }
}
