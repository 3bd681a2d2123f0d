//! Bitmask subsets of a labelled ground set.

use std::fmt;

use crate::error::{MatxError, Result};

/// Largest supported ground set. Subsets fit one `u32` and `2^n` sweeps stay below 16M.
pub const MAX_ELEMENTS: usize = 24;

/// A subset of `{0, .., universe_size-1}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u32,
    universe: u8,
}

impl ElementSet {
    pub fn new(bits: u32, universe_size: usize) -> Result<Self> {
        if universe_size > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(universe_size));
        }
        if bits & !full_mask(universe_size) != 0 {
            return Err(MatxError::Input(format!(
                "bitmask {bits:#x} has bits outside a universe of {universe_size}"
            )));
        }
        Ok(Self { bits, universe: universe_size as u8 })
    }

    pub(crate) fn from_bits(bits: u32, universe_size: usize) -> Self {
        debug_assert!(bits & !full_mask(universe_size) == 0);
        Self { bits, universe: universe_size as u8 }
    }

    pub fn empty(universe_size: usize) -> Self {
        Self::from_bits(0, universe_size)
    }

    pub fn full(universe_size: usize) -> Self {
        Self::from_bits(full_mask(universe_size), universe_size)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, universe_size: usize) -> Result<Self> {
        let mut bits = 0u32;
        for i in indices {
            if i >= universe_size {
                return Err(MatxError::Input(format!("index {i} outside universe of {universe_size}")));
            }
            bits |= 1 << i;
        }
        Self::new(bits, universe_size)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn universe_size(self) -> usize {
        self.universe as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.bits >> i & 1 == 1
    }

    pub fn union(self, other: Self) -> Self {
        Self::from_bits(self.bits | other.bits, self.universe_size().max(other.universe_size()))
    }

    pub fn intersection(self, other: Self) -> Self {
        Self::from_bits(self.bits & other.bits, self.universe_size())
    }

    pub fn difference(self, other: Self) -> Self {
        Self::from_bits(self.bits & !other.bits, self.universe_size())
    }

    pub fn complement(self) -> Self {
        Self::from_bits(!self.bits & full_mask(self.universe_size()), self.universe_size())
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.bits)
    }

    /// All subsets of this set, `∅` first and the set itself last.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let universe = self.universe_size();
        Subsets::new(self.bits).map(move |b| ElementSet::from_bits(b, universe))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the indices of set bits, ascending.
#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn bits_of(mask: u32) -> Elements {
    Elements(mask)
}

/// Enumerates every submask of `mask` in increasing numeric order.
pub(crate) struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Subsets {
    pub(crate) fn new(mask: u32) -> Self {
        Self { mask, next: Some(0) }
    }
}

impl Iterator for Subsets {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(cur)
    }
}

/// All `k`-element submasks of `{0..n-1}` in increasing numeric order (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let mut cur: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let lowest = c & c.wrapping_neg();
            let ripple = c + lowest;
            let next = (((ripple ^ c) >> 2) / lowest) | ripple;
            (next < limit).then_some(next)
        };
        Some(c as u32)
    })
}
