//! Loops, coloops, parallel and series classes, connectivity, isomorphism.

use std::collections::HashSet;

use super::Matroid;
use crate::error::{MatxError, Result};
use crate::set::{bits_of, ElementSet};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Blocks as bitmasks, ordered by least element.
    fn blocks(&mut self, members: u32) -> Vec<u32> {
        let mut by_root: Vec<(usize, u32)> = Vec::new();
        for i in bits_of(members) {
            let r = self.find(i);
            match by_root.iter_mut().find(|(root, _)| *root == r) {
                Some((_, m)) => *m |= 1 << i,
                None => by_root.push((r, 1 << i)),
            }
        }
        let mut out: Vec<u32> = by_root.into_iter().map(|(_, m)| m).collect();
        out.sort_by_key(|m| m.trailing_zeros());
        out
    }
}

impl Matroid {
    pub(crate) fn loop_mask(&self) -> u32 {
        let union = self.bases.iter().fold(0u32, |acc, b| acc | b);
        self.ground_mask() & !union
    }

    pub(crate) fn coloop_mask(&self) -> u32 {
        self.bases.iter().fold(self.ground_mask(), |acc, b| acc & b)
    }

    pub fn loops(&self) -> ElementSet {
        ElementSet::from_bits(self.loop_mask(), self.n())
    }

    pub fn coloops(&self) -> ElementSet {
        ElementSet::from_bits(self.coloop_mask(), self.n())
    }

    /// Parallel classes of the non-loop elements, ignoring loops.
    pub(crate) fn nonloop_parallel_masks(&self) -> Vec<u32> {
        let n = self.n();
        let mut together = vec![0u32; n];
        for &b in &self.bases {
            for i in bits_of(b) {
                together[i] |= b;
            }
        }
        let nonloops = self.ground_mask() & !self.loop_mask();
        let mut uf = UnionFind::new(n);
        for i in bits_of(nonloops) {
            // i and j are parallel when no basis holds both
            for j in bits_of(nonloops & !together[i]) {
                uf.union(i, j);
            }
        }
        uf.blocks(nonloops)
    }

    /// Parallel classes of a loopless matroid.
    pub fn parallel_classes(&self) -> Result<Vec<ElementSet>> {
        if self.loop_mask() != 0 {
            return Err(MatxError::HasLoops);
        }
        Ok(self.to_sets(self.nonloop_parallel_masks()))
    }

    /// Series classes (parallel classes of the dual) of the non-coloop elements.
    pub(crate) fn noncoloop_series_masks(&self) -> Vec<u32> {
        self.dual().nonloop_parallel_masks()
    }

    /// Series classes of a coloop-free matroid.
    pub fn series_classes(&self) -> Result<Vec<ElementSet>> {
        if self.coloop_mask() != 0 {
            return Err(MatxError::HasColoops);
        }
        Ok(self.to_sets(self.noncoloop_series_masks()))
    }

    fn to_sets(&self, masks: Vec<u32>) -> Vec<ElementSet> {
        masks.into_iter().map(|m| ElementSet::from_bits(m, self.n())).collect()
    }

    /// Components via the fundamental circuits of one basis: two elements share a
    /// component exactly when the fundamental graph connects them.
    pub(crate) fn component_masks(&self) -> Vec<u32> {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        let basis = self.bases[0];
        let set: HashSet<u32> = self.bases.iter().copied().collect();
        for e in bits_of(self.ground_mask() & !basis) {
            for f in bits_of(basis) {
                if set.contains(&((basis & !(1 << f)) | 1 << e)) {
                    uf.union(e, f);
                }
            }
        }
        uf.blocks(self.ground_mask())
    }

    pub fn components(&self) -> Vec<ElementSet> {
        self.to_sets(self.component_masks())
    }

    pub fn num_components(&self) -> usize {
        self.component_masks().len()
    }

    /// One component and at least one element; the empty matroid counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.num_components() == 1
    }

    /// Deletes loops and keeps the first element of every parallel class.
    pub fn simplification(&self) -> Matroid {
        let mut drop = self.loop_mask();
        for class in self.nonloop_parallel_masks() {
            drop |= class & !(1 << class.trailing_zeros());
        }
        if drop == self.ground_mask() {
            return Matroid::empty();
        }
        self.delete(ElementSet::from_bits(drop, self.n())).expect("simplification keeps an element")
    }

    /// Series classes `S` of a connected matroid with `M - S` connected.
    /// `M - S` with an empty ground set does not count as connected.
    pub fn regular_series_classes(&self) -> Result<Vec<ElementSet>> {
        if !self.is_connected() {
            return Err(MatxError::NotConnected);
        }
        let mut out = Vec::new();
        for class in self.noncoloop_series_masks() {
            if class == self.ground_mask() {
                continue;
            }
            let rest = self.delete(ElementSet::from_bits(class, self.n()))?;
            if rest.is_connected() {
                out.push(ElementSet::from_bits(class, self.n()));
            }
        }
        Ok(out)
    }

    /// Size of the smallest cocircuit, `None` when there is none (rank 0).
    pub fn min_cocircuit_size(&self) -> Option<usize> {
        self.dual().circuit_masks().iter().map(|c| c.count_ones() as usize).min()
    }

    /// Brute-force isomorphism test: backtracking over element bijections, pruned by
    /// how many bases contain each element.
    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        if self.n() != other.n() || self.rank != other.rank || self.bases.len() != other.bases.len() {
            return false;
        }
        let degree = |m: &Matroid| -> Vec<usize> {
            (0..m.n()).map(|i| m.bases.iter().filter(|b| *b >> i & 1 == 1).count()).collect()
        };
        let (da, db) = (degree(self), degree(other));
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        let target: HashSet<u32> = other.bases.iter().copied().collect();
        let mut image = vec![usize::MAX; self.n()];
        let mut used = vec![false; other.n()];
        self.extend_isomorphism(other, &da, &db, &target, 0, &mut image, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_isomorphism(
        &self,
        other: &Matroid,
        da: &[usize],
        db: &[usize],
        target: &HashSet<u32>,
        i: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == self.n() {
            return self.bases.iter().all(|&b| {
                let mapped = bits_of(b).fold(0u32, |acc, e| acc | 1 << image[e]);
                target.contains(&mapped)
            });
        }
        for j in 0..other.n() {
            if used[j] || da[i] != db[j] {
                continue;
            }
            image[i] = j;
            used[j] = true;
            // prune: every basis living inside the already-mapped prefix must map to a basis
            let prefix = (1u32 << (i + 1)) - 1;
            let consistent = self.bases.iter().filter(|&&b| b & !prefix == 0).all(|&b| {
                let mapped = bits_of(b).fold(0u32, |acc, e| acc | 1 << image[e]);
                target.contains(&mapped)
            });
            if consistent && self.extend_isomorphism(other, da, db, target, i + 1, image, used) {
                return true;
            }
            used[j] = false;
        }
        image[i] = usize::MAX;
        false
    }
}
