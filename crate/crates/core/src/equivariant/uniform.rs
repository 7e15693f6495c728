use num_bigint::BigInt;

use super::{h_product, Basis, SymFunction};
use crate::klz::enumerate_index_tuples;
use crate::{Error, Result};

/// Frobenius characteristic of the Whitney permutation representation of
/// `U_{m,d}` under `S_{m+d}`: `h_{d-i_r} h_{i_r-i_{r-1}} ... h_{i_2-i_1} h_{m+i_1}`.
///
/// Trailing zero coranks name the top flat, which every permutation fixes, so
/// they are dropped first; the empty chain gives the trivial representation.
/// Profiles that are not weakly decreasing within `0..=d` give zero.
pub fn equivariant_whitney_uniform(m: usize, d: usize, profile: &[i64]) -> Result<SymFunction> {
    let n = m + d;
    let in_range = profile.iter().all(|&i| 0 <= i && i <= d as i64);
    let monotone = profile.windows(2).all(|w| w[0] >= w[1]);
    if !in_range || !monotone {
        return Ok(SymFunction::zero(Basis::H, n));
    }
    let mut profile = profile.to_vec();
    while profile.last() == Some(&0) {
        profile.pop();
    }
    let Some(&last) = profile.last() else {
        return h_product(&[n as i64]);
    };
    let mut parts = vec![d as i64 - profile[0]];
    parts.extend(profile.windows(2).map(|w| w[0] - w[1]));
    parts.push(m as i64 + last);
    h_product(&parts)
}

/// `c^{S_{m+d}}_{U_{m,d}}(i)` in the `h` basis, from the factorised
/// alternating sum over index tuples.
pub fn equivariant_c_uniform(m: usize, d: usize, i: i64) -> Result<SymFunction> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let n = m + d;
    if i == 0 {
        return h_product(&[n as i64]);
    }
    let mut total = SymFunction::zero(Basis::H, n);
    for tuple in enumerate_index_tuples(i as usize, d) {
        let a = &tuple.a;
        let mut parts = vec![m as i64 + a[tuple.t(1)]];
        for j in 1..=tuple.r {
            if tuple.subset.contains(&j) {
                parts.push(a[j] - a[j - 1]);
            } else {
                parts.push(a[tuple.t(j + 1)] - a[j - 1]);
            }
        }
        total.add_scaled(&h_product(&parts)?, &BigInt::from(tuple.sign()))?;
    }
    Ok(total)
}
