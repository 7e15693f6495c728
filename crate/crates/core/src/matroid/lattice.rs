use std::collections::HashMap;
use std::ops::Range;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{ElementSet, WhitneyCounter};
use crate::{Error, IntPolynomial, Result};

pub type FlatId = usize;

/// The lattice of flats of a matroid.
///
/// Flats are stored as ground-set bitsets sorted by `(rank, bits)`, so id 0 is
/// the bottom (the closure of the empty set), the last id is the top, and the
/// flats of each rank occupy a contiguous id range. For every flat the list of
/// flats above it (itself included) is precomputed in ascending id order.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    ground: ElementSet,
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
    rank_offsets: Vec<usize>,
    upper: Vec<Vec<u32>>,
    index: HashMap<ElementSet, FlatId>,
    mobius: OnceLock<Vec<BigInt>>,
}

impl FlatLattice {
    /// Builds a lattice from flats with known ranks. The caller guarantees that
    /// the flats are closed under intersection and that ranks are consistent.
    pub(crate) fn from_ranked(ground: ElementSet, mut flats: Vec<(ElementSet, usize)>) -> Self {
        flats.sort_by_key(|&(bits, rank)| (rank, bits));
        flats.dedup();
        let rk = flats.last().map_or(0, |f| f.1);
        let mut rank_offsets = vec![0; rk + 2];
        for &(_, r) in &flats {
            rank_offsets[r + 1] += 1;
        }
        for r in 0..=rk {
            rank_offsets[r + 1] += rank_offsets[r];
        }
        let (flats, ranks): (Vec<_>, Vec<_>) = flats.into_iter().unzip();
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let upper = (0..flats.len())
            .into_par_iter()
            .map(|i| {
                let f = flats[i];
                let start = rank_offsets[ranks[i] + 1];
                std::iter::once(i as u32)
                    .chain(
                        (start..flats.len())
                            .filter(|&j| f.is_subset(flats[j]))
                            .map(|j| j as u32),
                    )
                    .collect()
            })
            .collect();
        Self {
            ground,
            flats,
            ranks,
            rank_offsets,
            upper,
            index,
            mobius: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Rank of the matroid.
    pub fn rk(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }

    pub fn bottom(&self) -> FlatId {
        0
    }

    pub fn top(&self) -> FlatId {
        self.flats.len() - 1
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn flat(&self, id: FlatId) -> ElementSet {
        self.flats[id]
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn rank(&self, id: FlatId) -> usize {
        self.ranks[id]
    }

    pub fn corank(&self, id: FlatId) -> usize {
        self.rk() - self.ranks[id]
    }

    pub fn id_of(&self, flat: ElementSet) -> Option<FlatId> {
        self.index.get(&flat).copied()
    }

    pub fn check_id(&self, id: FlatId) -> Result<()> {
        if id < self.flats.len() {
            Ok(())
        } else {
            Err(Error::InvalidFlat(id))
        }
    }

    pub fn flats_of_rank(&self, rank: usize) -> Range<FlatId> {
        if rank > self.rk() {
            return 0..0;
        }
        self.rank_offsets[rank]..self.rank_offsets[rank + 1]
    }

    /// Flats of the given corank; empty for out-of-range values.
    pub fn flats_of_corank(&self, corank: i64) -> Range<FlatId> {
        match usize::try_from(corank) {
            Ok(c) if c <= self.rk() => self.flats_of_rank(self.rk() - c),
            _ => 0..0,
        }
    }

    /// Number of flats of each rank `0..=rk`.
    pub fn rank_counts(&self) -> Vec<usize> {
        (0..=self.rk()).map(|r| self.flats_of_rank(r).len()).collect()
    }

    /// All flats `G >= id`, itself first, ascending.
    pub fn upper(&self, id: FlatId) -> &[u32] {
        &self.upper[id]
    }

    /// Flats `G >= id` with `rank G = rank`.
    pub fn upper_of_rank(&self, id: FlatId, rank: usize) -> &[u32] {
        let up = &self.upper[id];
        let range = self.flats_of_rank(rank);
        let lo = up.partition_point(|&g| (g as usize) < range.start);
        let hi = up.partition_point(|&g| (g as usize) < range.end);
        &up[lo..hi]
    }

    /// All flats `G <= id`, ascending.
    pub fn lower(&self, id: FlatId) -> Vec<FlatId> {
        let f = self.flats[id];
        (0..=id).filter(|&g| self.flats[g].is_subset(f)).collect()
    }

    pub fn leq(&self, a: FlatId, b: FlatId) -> bool {
        self.flats[a].is_subset(self.flats[b])
    }

    /// Lattice of the contraction at `id`: the interval `[id, top]` with ranks
    /// shifted down by `rank(id)` and the elements of the flat removed.
    pub fn contraction(&self, id: FlatId) -> Result<FlatLattice> {
        self.check_id(id)?;
        let base = self.flats[id];
        let shift = self.ranks[id];
        let flats = self.upper[id]
            .iter()
            .map(|&g| {
                let g = g as usize;
                (self.flats[g].difference(base), self.ranks[g] - shift)
            })
            .collect();
        Ok(Self::from_ranked(self.ground.difference(base), flats))
    }

    /// Lattice of the localization at `id`: the interval `[bottom, id]`.
    pub fn localization(&self, id: FlatId) -> Result<FlatLattice> {
        self.check_id(id)?;
        let flats = self
            .lower(id)
            .into_iter()
            .map(|g| (self.flats[g], self.ranks[g]))
            .collect();
        Ok(Self::from_ranked(self.flats[id], flats))
    }

    /// `mu(bottom, F)` for every flat, from `sum_{G <= F} mu(bottom, G) = 0` for `F > bottom`.
    pub fn mobius_from_bottom(&self) -> &[BigInt] {
        self.mobius.get_or_init(|| {
            let n = self.len();
            let mut acc = vec![BigInt::zero(); n];
            let mut mu = vec![BigInt::zero(); n];
            for g in 0..n {
                mu[g] = if g == 0 { BigInt::one() } else { acc[g].clone() };
                for &h in &self.upper[g][1..] {
                    acc[h as usize] -= &mu[g];
                }
            }
            mu
        })
    }

    /// `chi(t) = sum_F mu(bottom, F) t^{crk F}`.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.rk() + 1];
        for (f, mu) in self.mobius_from_bottom().iter().enumerate() {
            coeffs[self.corank(f)] += mu;
        }
        IntPolynomial::new(coeffs)
    }

    /// Number of multichains `F_r <= ... <= F_1` with `crk F_j = i_j`; the
    /// profile is given as `[i_r, ..., i_1]`.
    pub fn whitney_multi(&self, profile: &[i64]) -> BigInt {
        WhitneyCounter::new(self).count(profile)
    }

    /// Cover relations: `covers()[f]` lists the flats covering `f`.
    pub fn covers(&self) -> Vec<Vec<FlatId>> {
        (0..self.len())
            .map(|f| {
                let up = &self.upper[f][1..];
                up.iter()
                    .map(|&g| g as usize)
                    .filter(|&g| !up.iter().any(|&h| (h as usize) != g && self.leq(h as usize, g)))
                    .collect()
            })
            .collect()
    }

    /// Checks that every cover raises rank by exactly one, that the bottom and
    /// top are the unique minimum and maximum, and that intersections of flats are flats.
    pub fn check_lattice(&self) -> Result<()> {
        let top = self.flats[self.top()];
        if top != self.ground {
            return Err(Error::InvalidSpec("top flat is not the full ground set".into()));
        }
        if self.upper[0].len() != self.len() {
            return Err(Error::InvalidSpec("bottom flat is not below every flat".into()));
        }
        for (f, cov) in self.covers().iter().enumerate() {
            for &g in cov {
                if self.ranks[g] != self.ranks[f] + 1 {
                    return Err(Error::InvalidSpec(format!(
                        "cover {:?} < {:?} jumps from rank {} to {}",
                        self.flats[f], self.flats[g], self.ranks[f], self.ranks[g]
                    )));
                }
            }
        }
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let meet = self.flats[a].intersection(self.flats[b]);
                if !self.index.contains_key(&meet) {
                    return Err(Error::InvalidSpec(format!(
                        "intersection of {:?} and {:?} is not a flat",
                        self.flats[a], self.flats[b]
                    )));
                }
            }
        }
        Ok(())
    }
}
