//! Minors, duality, sums, pointed connections and single-element extensions.

use super::Matroid;
use crate::error::{MatxError, Result};
use crate::set::{bits_of, ElementSet, MAX_ELEMENTS};

/// Packs the bits of `mask` selected by `keep` into the low positions, preserving order.
pub(crate) fn compact(mask: u32, keep: u32) -> u32 {
    let mut out = 0u32;
    for (pos, i) in bits_of(keep).enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << pos;
        }
    }
    out
}

impl Matroid {
    fn kept_labels(&self, keep: u32) -> Vec<String> {
        bits_of(keep).map(|i| self.labels[i].clone()).collect()
    }

    /// `M - A`: bases are the maximal sets among `B - A`.
    pub fn delete(&self, set: ElementSet) -> Result<Matroid> {
        let a = set.bits() & self.ground_mask();
        if self.n() > 0 && a == self.ground_mask() {
            return Err(MatxError::DeleteEverything);
        }
        let keep = self.ground_mask() & !a;
        let best = self.bases.iter().map(|b| (b & keep).count_ones()).max().unwrap_or(0);
        let masks = self
            .bases
            .iter()
            .filter(|b| (*b & keep).count_ones() == best)
            .map(|&b| compact(b, keep))
            .collect();
        Ok(Matroid::from_masks_unchecked(self.kept_labels(keep), masks))
    }

    /// `M / A`: bases are `B - A` for the bases meeting `A` in `r(A)` elements.
    pub fn contract(&self, set: ElementSet) -> Result<Matroid> {
        let a = set.bits() & self.ground_mask();
        if self.n() > 0 && a == self.ground_mask() {
            return Err(MatxError::DeleteEverything);
        }
        let keep = self.ground_mask() & !a;
        let best = self.bases.iter().map(|b| (b & a).count_ones()).max().unwrap_or(0);
        let masks = self
            .bases
            .iter()
            .filter(|b| (*b & a).count_ones() == best)
            .map(|&b| compact(b, keep))
            .collect();
        Ok(Matroid::from_masks_unchecked(self.kept_labels(keep), masks))
    }

    pub fn delete_element(&self, e: usize) -> Result<Matroid> {
        self.delete(ElementSet::from_indices([e], self.n())?)
    }

    pub fn contract_element(&self, e: usize) -> Result<Matroid> {
        self.contract(ElementSet::from_indices([e], self.n())?)
    }

    /// `M | S`, the restriction to `S` (deletion of the complement).
    pub fn restrict(&self, set: ElementSet) -> Result<Matroid> {
        if set.bits() == 0 && self.n() > 0 {
            return Ok(Matroid::empty());
        }
        self.delete(set.complement())
    }

    /// Bases of `M*` are the complements of the bases of `M`; labels are kept.
    pub fn dual(&self) -> Matroid {
        let g = self.ground_mask();
        Matroid::from_masks_unchecked(self.labels.clone(), self.bases.iter().map(|b| g & !b).collect())
    }

    /// `M1 ⊕ M2`. Labels are kept when disjoint, otherwise suffixed `_A` / `_B`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n() + other.n();
        if n > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(n));
        }
        let clash = self.labels.iter().any(|l| other.labels.contains(l));
        let labels = if clash {
            self.labels
                .iter()
                .map(|l| format!("{l}_A"))
                .chain(other.labels.iter().map(|l| format!("{l}_B")))
                .collect()
        } else {
            self.labels.iter().chain(other.labels.iter()).cloned().collect()
        };
        let shift = self.n();
        let mut masks = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                masks.push(a | b << shift);
            }
        }
        Ok(Matroid::from_masks_unchecked(labels, masks))
    }

    /// Adds a new element in general position (the free extension), labelled `label`.
    pub fn free_extension(&self, label: &str) -> Result<Matroid> {
        let n = self.n() + 1;
        if n > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(n));
        }
        if self.labels.iter().any(|l| l == label) {
            return Err(MatxError::DuplicateLabel(label.to_string()));
        }
        let e = 1u32 << self.n();
        let mut masks = self.bases.clone();
        for &b in &self.bases {
            for f in bits_of(b) {
                masks.push((b & !(1 << f)) | e);
            }
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Ok(Matroid::from_masks_unchecked(labels, masks))
    }

    /// Dual of the free extension of the dual: rank and size both grow by one and
    /// contracting the new element gives back `M`. The new element is labelled `label`.
    pub fn free_coextension_labeled(&self, label: &str) -> Result<Matroid> {
        Ok(self.dual().free_extension(label)?.dual())
    }

    /// [`Matroid::free_coextension_labeled`] with a fresh label derived from `"e"`.
    pub fn free_coextension(&self) -> Result<Matroid> {
        let label = self.fresh_label("e");
        self.free_coextension_labeled(&label)
    }

    /// Adds `label` parallel to element `e`.
    pub fn parallel_extension(&self, e: usize, label: &str) -> Result<Matroid> {
        let n = self.n() + 1;
        if n > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(n));
        }
        if self.labels.iter().any(|l| l == label) {
            return Err(MatxError::DuplicateLabel(label.to_string()));
        }
        let new = 1u32 << self.n();
        let mut masks = self.bases.clone();
        for &b in &self.bases {
            if b >> e & 1 == 1 {
                masks.push((b & !(1 << e)) | new);
            }
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Ok(Matroid::from_masks_unchecked(labels, masks))
    }

    /// Adds `label` in series with element `e`.
    pub fn series_extension(&self, e: usize, label: &str) -> Result<Matroid> {
        Ok(self.dual().parallel_extension(e, label)?.dual())
    }

    /// A label not yet used, built from `base` with trailing primes.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut label = base.to_string();
        while self.labels.contains(&label) {
            label.push('\'');
        }
        label
    }
}

/// A matroid with a distinguished basepoint that is neither a loop nor a coloop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMatroid {
    matroid: Matroid,
    basepoint: usize,
}

impl PointedMatroid {
    pub fn new(matroid: Matroid, basepoint: usize) -> Result<Self> {
        if basepoint >= matroid.n() {
            return Err(MatxError::Input(format!("basepoint index {basepoint} out of range")));
        }
        let bit = 1u32 << basepoint;
        let in_some = matroid.bases.iter().any(|b| b & bit != 0);
        let in_all = matroid.bases.iter().all(|b| b & bit != 0);
        if !in_some || in_all {
            return Err(MatxError::BadBasepoint(matroid.labels[basepoint].clone()));
        }
        Ok(Self { matroid, basepoint })
    }

    pub fn by_label(matroid: Matroid, label: &str) -> Result<Self> {
        let i = matroid.index_of(label)?;
        Self::new(matroid, i)
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }

    fn dual(&self) -> PointedMatroid {
        PointedMatroid { matroid: self.matroid.dual(), basepoint: self.basepoint }
    }
}

/// Result ground set: `A`'s elements in order (basepoint renamed `p`, others suffixed `_A`),
/// then `B`'s non-basepoint elements suffixed `_B`.
fn connection_layout(a: &PointedMatroid, b: &PointedMatroid) -> Result<(Vec<String>, Vec<usize>, Vec<usize>, usize)> {
    let (ma, mb) = (&a.matroid, &b.matroid);
    let n = ma.n() + mb.n() - 1;
    if n > MAX_ELEMENTS {
        return Err(MatxError::TooLarge(n));
    }
    let mut labels = Vec::with_capacity(n);
    let mut pos_a = Vec::with_capacity(ma.n());
    for (i, l) in ma.labels.iter().enumerate() {
        pos_a.push(labels.len());
        labels.push(if i == a.basepoint { "p".to_string() } else { format!("{l}_A") });
    }
    let p = pos_a[a.basepoint];
    let mut pos_b = Vec::with_capacity(mb.n());
    for (i, l) in mb.labels.iter().enumerate() {
        if i == b.basepoint {
            pos_b.push(p);
        } else {
            pos_b.push(labels.len());
            labels.push(format!("{l}_B"));
        }
    }
    Ok((labels, pos_a, pos_b, p))
}

fn remap(mask: u32, pos: &[usize]) -> u32 {
    bits_of(mask).fold(0, |acc, i| acc | 1 << pos[i])
}

/// Parallel connection of `A` and `B` along their basepoints; the result is pointed at `p`.
///
/// Bases are `B1 ∪ B2` with `p` in both, or `B1 ∪ (B2 - p)` with `p ∉ B1, p ∈ B2`,
/// or symmetrically. Rank is `r(A) + r(B) - 1`.
pub fn parallel_connection(a: &PointedMatroid, b: &PointedMatroid) -> Result<PointedMatroid> {
    let (labels, pos_a, pos_b, p) = connection_layout(a, b)?;
    let pa = 1u32 << a.basepoint;
    let pb = 1u32 << b.basepoint;
    let pbit = 1u32 << p;
    let mut masks = Vec::new();
    for &x in &a.matroid.bases {
        let xa = remap(x, &pos_a);
        for &y in &b.matroid.bases {
            let yb = remap(y, &pos_b);
            match (x & pa != 0, y & pb != 0) {
                (true, true) => masks.push(xa | yb),
                (false, true) => masks.push(xa | (yb & !pbit)),
                (true, false) => masks.push((xa & !pbit) | yb),
                (false, false) => {}
            }
        }
    }
    let matroid = Matroid::from_masks_unchecked(labels, masks);
    Ok(PointedMatroid { matroid, basepoint: p })
}

/// Series connection: `(P(A*, B*))*`, with the same labelling as [`parallel_connection`].
pub fn series_connection(a: &PointedMatroid, b: &PointedMatroid) -> Result<PointedMatroid> {
    let pc = parallel_connection(&a.dual(), &b.dual())?;
    Ok(pc.dual())
}
