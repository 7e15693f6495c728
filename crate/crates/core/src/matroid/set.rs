use std::fmt;

use crate::{Error, Result};

/// Subset of a ground set of at most 128 elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const MAX_ELEMENTS: usize = 128;

    pub const fn empty() -> Self {
        Self(0)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Result<Self> {
        match n {
            0 => Ok(Self(0)),
            1..=127 => Ok(Self((1u128 << n) - 1)),
            128 => Ok(Self(u128::MAX)),
            _ => Err(Error::GroundTooLarge(n)),
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < Self::MAX_ELEMENTS);
        Self(1u128 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u128;
        for e in elements {
            if e >= Self::MAX_ELEMENTS {
                return Err(Error::GroundTooLarge(e + 1));
            }
            bits |= 1u128 << e;
        }
        Ok(Self(bits))
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        e < Self::MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        Self(self.0 | 1u128 << e)
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// Image under a permutation of the ground set.
    pub fn permuted(self, perm: &[usize]) -> Self {
        Self(self.iter().fold(0u128, |acc, e| acc | 1u128 << perm[e]))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
