use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::WhitneyTables;
use crate::klz::enumerate_index_tuples;
use crate::{Error, IntPolynomial, Result};

/// Kazhdan-Lusztig and Z-polynomials of `M_0, ..., M_{d_max}` for one family,
/// computed from the Whitney tables alone.
#[derive(Clone, Debug)]
pub struct FamilySolver {
    tables: WhitneyTables,
    p: Vec<IntPolynomial>,
    z: Vec<IntPolynomial>,
}

impl FamilySolver {
    pub fn new(tables: WhitneyTables) -> Self {
        let mut p: Vec<IntPolynomial> = Vec::with_capacity(tables.d_max() + 1);
        for d in 0..=tables.d_max() {
            let next = next_kl(&tables, &p, d);
            p.push(next);
        }
        let z = (0..=tables.d_max()).map(|d| z_from_p(&tables, &p, d)).collect();
        Self { tables, p, z }
    }

    pub fn tables(&self) -> &WhitneyTables {
        &self.tables
    }

    pub fn d_max(&self) -> usize {
        self.tables.d_max()
    }

    pub fn kl(&self, d: usize) -> Result<&IntPolynomial> {
        self.tables.check_rank(d)?;
        Ok(&self.p[d])
    }

    pub fn z(&self, d: usize) -> Result<&IntPolynomial> {
        self.tables.check_rank(d)?;
        Ok(&self.z[d])
    }

    /// `P_d = sum_k w_d(k) t^{d-k} Z_k`, recovering `P` from the Z-polynomials.
    pub fn kl_from_z(&self, d: usize) -> Result<IntPolynomial> {
        self.tables.check_rank(d)?;
        Ok(self
            .tables
            .char_row(d)
            .iter()
            .enumerate()
            .map(|(k, w)| self.z[k].scale(w).mul_t_power(d - k))
            .sum())
    }

    /// `W_d(i_r, ..., i_1)` as the product `prod_j W_{i_{j+1}}(i_j)` with `i_{r+1} = d`.
    pub fn whitney_multi(&self, d: usize, profile: &[i64]) -> Result<BigInt> {
        self.tables.check_rank(d)?;
        let mut upper = d as i64;
        let mut product = BigInt::one();
        for &i in profile {
            if i < 0 || i > upper {
                return Ok(BigInt::zero());
            }
            product *= &self.tables.whitney_row(upper as usize)[i as usize];
            upper = i;
        }
        Ok(product)
    }

    /// `c_d(i)` by the alternating sum of Whitney products over index tuples.
    pub fn kl_coeff_closed(&self, d: usize, i: i64) -> Result<BigInt> {
        self.tables.check_rank(d)?;
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        if i == 0 {
            return Ok(BigInt::one());
        }
        enumerate_index_tuples(i as usize, d)
            .iter()
            .map(|t| Ok(self.whitney_multi(d, &t.profile())? * t.sign()))
            .sum()
    }
}

/// `c_d(i) = sum_{k<d} W_d(k) c_k(k-i) - sum_{k<d} W_d(k) c_k(i-d+k)` for `2i < d`.
fn next_kl(tables: &WhitneyTables, p: &[IntPolynomial], d: usize) -> IntPolynomial {
    if d == 0 {
        return IntPolynomial::one();
    }
    let row = tables.whitney_row(d);
    let coeffs = (0..d.div_ceil(2) as i64)
        .map(|i| {
            let mut total = BigInt::zero();
            for (k, w) in row.iter().enumerate().take(d) {
                let k = k as i64;
                let delta = p[k as usize].coeff_at(k - i) - p[k as usize].coeff_at(i - d as i64 + k);
                if !delta.is_zero() {
                    total += w * delta;
                }
            }
            total
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// `Z_d = sum_k W_d(k) t^{d-k} P_k`.
fn z_from_p(tables: &WhitneyTables, p: &[IntPolynomial], d: usize) -> IntPolynomial {
    tables
        .whitney_row(d)
        .iter()
        .enumerate()
        .map(|(k, w)| p[k].scale(w).mul_t_power(d - k))
        .sum()
}
