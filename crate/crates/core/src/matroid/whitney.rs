use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FlatId, FlatLattice};

/// Memoized counter of corank-profiled multichains.
///
/// `count(&[i_r, ..., i_1])` follows the contraction recursion
/// `W(i_r, ..., i_1) = sum_{crk F = i_r} W_{M^F}(i_{r-1}, ..., i_1)`; partial
/// counts are cached by `(flat, remaining profile)` so that profiles sharing a
/// suffix share work. An optional mask restricts the chains to a subset of flats
/// (used for fixed-point counts under a group element).
pub struct WhitneyCounter<'a> {
    lattice: &'a FlatLattice,
    allowed: Option<Vec<bool>>,
    memo: HashMap<(FlatId, Vec<i64>), BigInt>,
}

impl<'a> WhitneyCounter<'a> {
    pub fn new(lattice: &'a FlatLattice) -> Self {
        Self {
            lattice,
            allowed: None,
            memo: HashMap::new(),
        }
    }

    /// Counts only chains made of flats `f` with `allowed[f]`.
    pub fn restricted(lattice: &'a FlatLattice, allowed: Vec<bool>) -> Self {
        assert_eq!(allowed.len(), lattice.len());
        Self {
            lattice,
            allowed: Some(allowed),
            memo: HashMap::new(),
        }
    }

    fn is_allowed(&self, f: FlatId) -> bool {
        self.allowed.as_ref().is_none_or(|a| a[f])
    }

    pub fn count(&mut self, profile: &[i64]) -> BigInt {
        let Some((&first, rest)) = profile.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for f in self.lattice.flats_of_corank(first) {
            if self.is_allowed(f) {
                total += self.extend(f, rest);
            }
        }
        total
    }

    fn extend(&mut self, from: FlatId, rest: &[i64]) -> BigInt {
        let Some((&next, tail)) = rest.split_first() else {
            return BigInt::one();
        };
        let lat = self.lattice;
        let rank = match usize::try_from(next) {
            Ok(c) if c <= lat.rk() => lat.rk() - c,
            _ => return BigInt::zero(),
        };
        if rank < lat.rank(from) {
            return BigInt::zero();
        }
        let key = (from, rest.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for &g in lat.upper_of_rank(from, rank) {
            let g = g as usize;
            if self.is_allowed(g) {
                total += self.extend(g, tail);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}
