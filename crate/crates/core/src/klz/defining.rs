use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::matroid::{FlatId, FlatLattice};
use crate::IntPolynomial;

/// Exact coefficient arithmetic with overflow detection, so the common case can
/// run on machine integers and fall back to big integers when it must.
trait Coeff: Clone + Send + Sync {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn into_big(self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn into_big(self) -> BigInt {
        self.into()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn into_big(self) -> BigInt {
        self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

/// `mu(g, h)` for every `h >= g`, aligned with `lat.upper(g)`.
///
/// `pos` is scratch space of length `lat.len()`; its contents on return are
/// unspecified.
pub fn interval_mobius(lat: &FlatLattice, g: FlatId, pos: &mut [u32]) -> Vec<BigInt> {
    mobius_in::<BigInt>(lat, g, pos).expect("big integer arithmetic cannot overflow")
}

fn mobius_in<C: Coeff>(lat: &FlatLattice, g: FlatId, pos: &mut [u32]) -> Option<Vec<C>> {
    let up = lat.upper(g);
    for (b, &h) in up.iter().enumerate() {
        pos[h as usize] = b as u32;
    }
    let mut mu = vec![C::zero(); up.len()];
    mu[0] = C::from_i64(1);
    for b in 0..up.len() {
        if mu[b].is_zero() {
            continue;
        }
        let m = mu[b].clone();
        for &h in &lat.upper(up[b] as usize)[1..] {
            let slot = &mut mu[pos[h as usize] as usize];
            *slot = slot.sub(&m)?;
        }
    }
    Some(mu)
}

/// Coefficients of `P_{M^g}` read off the top of
/// `R(t) = sum_{F > g} chi_{[g, F]}(t) P_{M^F}(t)`, where
/// `chi_{[g, F]}(t) = sum_{g <= H <= F} mu(g, H) t^{rk F - rk H}`.
fn kl_at<C: Coeff>(lat: &FlatLattice, g: FlatId, p: &[Vec<C>], pos: &mut [u32]) -> Option<Vec<C>> {
    let local_rank = lat.corank(g);
    if local_rank == 0 {
        return Some(vec![C::from_i64(1)]);
    }
    let mu = mobius_in::<C>(lat, g, pos)?;
    let up = lat.upper(g);
    // Only degrees above rk/2 of R are needed.
    let low = local_rank / 2 + 1;
    let mut r = vec![C::zero(); local_rank + 1];
    for (b, &h) in up.iter().enumerate() {
        if mu[b].is_zero() {
            continue;
        }
        let h = h as usize;
        let rank_h = lat.rank(h);
        for &f in lat.upper(h) {
            let f = f as usize;
            if f == g {
                continue;
            }
            let shift = lat.rank(f) - rank_h;
            for (k, c) in p[f].iter().enumerate() {
                let d = shift + k;
                if d >= low {
                    r[d] = r[d].add(&mu[b].mul(c)?)?;
                }
            }
        }
    }
    let mut coeffs = vec![C::from_i64(1)];
    coeffs.extend((1..local_rank.div_ceil(2)).map(|j| r[local_rank - j].clone()));
    Some(coeffs)
}

fn all_contractions<C: Coeff>(lat: &FlatLattice) -> Option<Vec<IntPolynomial>> {
    let n = lat.len();
    let mut p: Vec<Vec<C>> = vec![Vec::new(); n];
    for rank in (0..=lat.rk()).rev() {
        let level = lat.flats_of_rank(rank);
        let start = level.start;
        let computed: Option<Vec<Vec<C>>> = level
            .into_par_iter()
            .map_init(|| vec![0u32; n], |pos, g| kl_at(lat, g, &p, pos))
            .collect();
        for (offset, coeffs) in computed?.into_iter().enumerate() {
            p[start + offset] = coeffs;
        }
    }
    Some(
        p.into_iter()
            .map(|c| IntPolynomial::new(c.into_iter().map(C::into_big).collect()))
            .collect(),
    )
}

/// `P_{M^F}` for every flat `F`, indexed by flat id, from the defining
/// functional equation and the degree bound.
pub fn kl_all_contractions(lat: &FlatLattice) -> Vec<IntPolynomial> {
    all_contractions::<i128>(lat)
        .or_else(|| all_contractions::<BigInt>(lat))
        .expect("big integer arithmetic cannot overflow")
}

#[cfg(test)]
pub(super) fn kl_all_contractions_big(lat: &FlatLattice) -> Vec<IntPolynomial> {
    all_contractions::<BigInt>(lat).unwrap()
}
