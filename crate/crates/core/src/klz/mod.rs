//! Kazhdan-Lusztig and Z-polynomials of an arbitrary lattice of flats.
//!
//! Four routes to `P_M(t)` are provided and must agree exactly:
//!
//! * [`KlMethod::Defining`]: the characterising functional equation
//!   `t^{rk} P(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t)` with the degree bound.
//! * [`KlMethod::MobiusInversion`]: `P_M = sum_F mu(0, F) t^{rk F} Z_{M^F}`
//!   combined with the palindromicity of `Z_M`.
//! * [`KlMethod::NewRecursion`]: the coefficient recursion obtained by comparing
//!   `z(i)` with `z(rk - i)`, which only refers to proper contractions.
//! * [`KlMethod::ClosedFormula`]: the signed sum of multi-indexed Whitney numbers
//!   over [`enumerate_index_tuples`].
//!
//! Every route works on the contractions `M^G` by restricting to the interval
//! `[G, top]` of the given lattice; nothing is re-enumerated.

mod defining;
mod tuples;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::matroid::{FlatId, FlatLattice, WhitneyCounter};
use crate::{Error, IntPolynomial, Result};

pub use defining::{interval_mobius, kl_all_contractions};
pub use tuples::{enumerate_index_tuples, t_index, IndexTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KlMethod {
    Defining,
    MobiusInversion,
    NewRecursion,
    ClosedFormula,
}

impl KlMethod {
    pub const ALL: [KlMethod; 4] = [
        KlMethod::Defining,
        KlMethod::MobiusInversion,
        KlMethod::NewRecursion,
        KlMethod::ClosedFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KlMethod::Defining => "defining",
            KlMethod::MobiusInversion => "mobius",
            KlMethod::NewRecursion => "recursion",
            KlMethod::ClosedFormula => "closed",
        }
    }
}

impl fmt::Display for KlMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KlMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        KlMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected defining, mobius, recursion or closed)"))
    }
}

/// `P_M(t)` by the chosen method.
pub fn kl_polynomial(lat: &FlatLattice, method: KlMethod) -> IntPolynomial {
    match method {
        KlMethod::Defining => kl_defining(lat),
        KlMethod::MobiusInversion => kl_via_mobius(lat),
        KlMethod::NewRecursion => kl_new_recursion(lat),
        KlMethod::ClosedFormula => kl_closed(lat),
    }
}

pub fn kl_defining(lat: &FlatLattice) -> IntPolynomial {
    kl_all_contractions(lat).swap_remove(lat.bottom())
}

/// `Z_M(t) = sum_F t^{rk F} P_{M^F}(t)`.
pub fn z_polynomial(lat: &FlatLattice) -> IntPolynomial {
    let p = kl_all_contractions(lat);
    z_from_contractions(lat, lat.bottom(), &p)
}

/// `Z` of the contraction at `g`, given `P` of every contraction above it.
pub(crate) fn z_from_contractions(lat: &FlatLattice, g: FlatId, p: &[IntPolynomial]) -> IntPolynomial {
    let base = lat.rank(g);
    let mut coeffs = vec![BigInt::zero(); lat.rk() - base + 1];
    for &f in lat.upper(g) {
        let f = f as usize;
        let shift = lat.rank(f) - base;
        for (k, c) in p[f].coeffs().iter().enumerate() {
            coeffs[shift + k] += c;
        }
    }
    IntPolynomial::new(coeffs)
}

/// `Z_{M^F}` for every flat `F`, from the defining route.
pub fn z_all_contractions(lat: &FlatLattice) -> Vec<IntPolynomial> {
    let p = kl_all_contractions(lat);
    (0..lat.len()).map(|g| z_from_contractions(lat, g, &p)).collect()
}

/// Evaluates `sum_F mu(0, F) t^{rk F} Z_{M^F}(t)` for supplied Z-polynomials of
/// the contractions; with the true Z-polynomials this reproduces `P_M`.
pub fn mobius_inversion_sum(lat: &FlatLattice, z: &[IntPolynomial]) -> IntPolynomial {
    lat.mobius_from_bottom()
        .iter()
        .enumerate()
        .filter(|(_, mu)| !mu.is_zero())
        .map(|(f, mu)| z[f].scale(mu).mul_t_power(lat.rank(f)))
        .sum()
}

/// Möbius-inversion route.
///
/// Writing `P_G = Z_G + K_G` with `K_G = sum_{H > G} mu(G, H) t^{rk H - rk G} Z_H`,
/// the degree bound on `P_G` and the palindromicity of `Z_G` force
/// `c_G(j) = k_G(j) - k_G(R - j)` for `j < R / 2`, where `R` is the rank of `M^G`.
pub fn kl_via_mobius(lat: &FlatLattice) -> IntPolynomial {
    let n = lat.len();
    let mut p = vec![IntPolynomial::zero(); n];
    let mut z = vec![IntPolynomial::zero(); n];
    let mut pos = vec![0u32; n];
    for g in (0..n).rev() {
        let local_rank = lat.corank(g);
        let up = lat.upper(g);
        let mu = interval_mobius(lat, g, &mut pos);
        let mut k = vec![BigInt::zero(); local_rank + 1];
        for (b, &h) in up.iter().enumerate().skip(1) {
            if mu[b].is_zero() {
                continue;
            }
            let h = h as usize;
            let m = &mu[b];
            let shift = lat.rank(h) - lat.rank(g);
            for (e, c) in z[h].coeffs().iter().enumerate() {
                k[shift + e] += m * c;
            }
        }
        let coeffs: Vec<BigInt> = (0..local_rank.div_ceil(2).max(1))
            .map(|j| &k[j] - &k[local_rank - j])
            .collect();
        p[g] = if local_rank == 0 {
            IntPolynomial::one()
        } else {
            IntPolynomial::new(coeffs)
        };
        z[g] = z_from_contractions(lat, g, &p);
    }
    p.swap_remove(lat.bottom())
}

/// Memoized coefficients of the recursion
/// `c_G(i) = sum_{F > G} c_F(crk F - i) - sum_{F > G} c_F(i - rk_G F)`.
struct NewRecursion<'a> {
    lat: &'a FlatLattice,
    memo: HashMap<(FlatId, i64), BigInt>,
}

impl<'a> NewRecursion<'a> {
    fn new(lat: &'a FlatLattice) -> Self {
        Self {
            lat,
            memo: HashMap::new(),
        }
    }

    /// `c_{M^g}(i)` for any integer `i`; out-of-range coefficients are zero.
    fn coeff(&mut self, g: FlatId, i: i64) -> BigInt {
        let local_rank = self.lat.corank(g) as i64;
        if i < 0 {
            return BigInt::zero();
        }
        if i == 0 {
            return BigInt::one();
        }
        if 2 * i >= local_rank {
            return BigInt::zero();
        }
        if let Some(v) = self.memo.get(&(g, i)) {
            return v.clone();
        }
        let v = self.rhs(g, i, false);
        self.memo.insert((g, i), v.clone());
        v
    }

    /// Right-hand side of the recursion; `include_bottom` adds the `F = G`
    /// term to the first sum, which must not change anything when `2i < rk`.
    fn rhs(&mut self, g: FlatId, i: i64, include_bottom: bool) -> BigInt {
        let lat = self.lat;
        let base = lat.rank(g) as i64;
        let skip = usize::from(!include_bottom);
        let mut total = BigInt::zero();
        for &f in &lat.upper(g)[skip..] {
            let f = f as usize;
            let crk = lat.corank(f) as i64;
            let rk_local = lat.rank(f) as i64 - base;
            if crk - i >= 0 {
                total += self.coeff(f, crk - i);
            }
            if f != g && i - rk_local >= 0 {
                total -= self.coeff(f, i - rk_local);
            }
        }
        total
    }
}

/// `c_M(i)` by the palindromic recursion.
pub fn kl_coeff_new_recursion(lat: &FlatLattice, i: i64) -> Result<BigInt> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    Ok(NewRecursion::new(lat).coeff(lat.bottom(), i))
}

pub fn kl_new_recursion(lat: &FlatLattice) -> IntPolynomial {
    let mut rec = NewRecursion::new(lat);
    let top_index = lat.rk().div_ceil(2).max(1) as i64;
    IntPolynomial::new((0..top_index).map(|i| rec.coeff(lat.bottom(), i)).collect())
}

/// The recursion's right-hand side with the `F = bottom` term kept in the first sum.
pub fn new_recursion_rhs_with_bottom(lat: &FlatLattice, i: i64) -> BigInt {
    NewRecursion::new(lat).rhs(lat.bottom(), i, true)
}

/// `c_M(i)` by the alternating Whitney-number formula; `c(0) = 1`.
pub fn kl_coeff_closed(lat: &FlatLattice, i: i64) -> Result<BigInt> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    if i == 0 {
        return Ok(BigInt::one());
    }
    let mut counter = WhitneyCounter::new(lat);
    Ok(closed_with(&mut counter, i as usize, lat.rk()))
}

fn closed_with(counter: &mut WhitneyCounter<'_>, i: usize, rk: usize) -> BigInt {
    enumerate_index_tuples(i, rk)
        .iter()
        .map(|t| counter.count(&t.profile()) * t.sign())
        .sum()
}

pub fn kl_closed(lat: &FlatLattice) -> IntPolynomial {
    let mut counter = WhitneyCounter::new(lat);
    let top_index = lat.rk().div_ceil(2).max(1);
    let coeffs = (0..top_index)
        .map(|i| {
            if i == 0 {
                BigInt::one()
            } else {
                closed_with(&mut counter, i, lat.rk())
            }
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// One signed Whitney term of the closed formula, kept for inspection.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedTerm {
    pub tuple: IndexTuple,
    pub profile: Vec<i64>,
    pub sign: i64,
    #[serde(serialize_with = "crate::polyarith::serialize_bigint")]
    pub whitney: BigInt,
}

/// All terms contributing to `c_M(i)` with their Whitney values.
pub fn closed_formula_terms(lat: &FlatLattice, i: usize) -> Vec<ClosedTerm> {
    let mut counter = WhitneyCounter::new(lat);
    enumerate_index_tuples(i, lat.rk())
        .into_iter()
        .map(|tuple| {
            let profile = tuple.profile();
            let whitney = counter.count(&profile);
            let sign = tuple.sign();
            ClosedTerm {
                tuple,
                profile,
                sign,
                whitney,
            }
        })
        .collect()
}
