//! Contraction-closed ("nice") families of matroids.
//!
//! For a family `M_0, M_1, ...` with `rk M_d = d` in which every contraction at a
//! corank-`k` flat looks like `M_k`, everything is determined by the flat
//! counts `W_d(k)` and characteristic coefficients `w_d(k)`. This module builds
//! those tables for the braid, type-B, uniform and `F_q`-vector families and
//! runs the Kazhdan-Lusztig recursion, Z-polynomials, product Whitney numbers
//! and generating-series identities on them without touching a lattice.

mod numbers;
mod realize;
mod series;
mod solver;
mod tables;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::{Error, IntPolynomial, Result};

pub use numbers::{
    binomial, factorial, gaussian_binomial, is_prime_power, narayana, stirling1_signed, stirling2,
};
pub use realize::family_matroid_spec;
pub use series::{series_identity_check, series_identity_report, SeriesReport, MAX_SERIES_ORDER};
pub use solver::FamilySolver;
pub use tables::WhitneyTables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NiceFamily {
    /// Graphic matroid of the complete graph on `d + 1` vertices.
    Braid,
    /// Reflection arrangement of type `B_d`.
    TypeB,
    /// `U_{m,d}`: rank `d` on `m + d` elements, `m >= 1`.
    Uniform(u32),
    /// All vectors of `F_q^d`, `q` a prime power.
    QVec(u64),
}

impl NiceFamily {
    pub fn validate(self) -> Result<()> {
        match self {
            NiceFamily::Uniform(0) => Err(Error::InvalidFamily("uniform family needs m >= 1".to_string())),
            NiceFamily::QVec(q) if !is_prime_power(q) => {
                Err(Error::InvalidFamily(format!("qvec needs a prime power, got {q}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for NiceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NiceFamily::Braid => f.write_str("braid"),
            NiceFamily::TypeB => f.write_str("typeb"),
            NiceFamily::Uniform(m) => write!(f, "uniform:{m}"),
            NiceFamily::QVec(q) => write!(f, "qvec:{q}"),
        }
    }
}

/// Parses `braid`, `typeb`, `uniform:M` or `qvec:Q`.
impl FromStr for NiceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("{s:?}: expected braid, typeb, uniform:M or qvec:Q"));
        let family = match s.split_once(':') {
            None if s == "braid" => NiceFamily::Braid,
            None if s == "typeb" => NiceFamily::TypeB,
            Some(("uniform", m)) => NiceFamily::Uniform(m.parse().map_err(|_| bad())?),
            Some(("qvec", q)) => NiceFamily::QVec(q.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        family.validate()?;
        Ok(family)
    }
}

impl Serialize for NiceFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn build_tables(family: NiceFamily, d_max: usize) -> Result<WhitneyTables> {
    WhitneyTables::build(family, d_max)
}

fn solver(family: NiceFamily, d: usize) -> Result<FamilySolver> {
    Ok(FamilySolver::new(WhitneyTables::build(family, d)?))
}

/// `P_d(t)` for the family member of rank `d`.
pub fn kl_family(family: NiceFamily, d: usize) -> Result<IntPolynomial> {
    solver(family, d)?.kl(d).cloned()
}

/// `Z_d(t)` for the family member of rank `d`.
pub fn z_family(family: NiceFamily, d: usize) -> Result<IntPolynomial> {
    solver(family, d)?.z(d).cloned()
}

/// Multi-indexed Whitney number of `M_d` from the product formula.
pub fn whitney_multi_family(family: NiceFamily, d: usize, profile: &[i64]) -> Result<BigInt> {
    FamilySolver::new(WhitneyTables::build(family, d)?).whitney_multi(d, profile)
}

/// `c_d(i)` from the closed formula with Whitney products.
pub fn kl_closed_family(family: NiceFamily, d: usize, i: i64) -> Result<BigInt> {
    solver(family, d)?.kl_coeff_closed(d, i)
}

/// Checks `Z_d(t) = Z_{d-1}(qt) + t Z_{d-1}(t)` for `1 <= d <= d_max`.
pub fn q_shift_check(q: u64, d_max: usize) -> Result<bool> {
    let s = solver(NiceFamily::QVec(q), d_max)?;
    let q = BigInt::from(q);
    for d in 1..=d_max {
        let prev = s.z(d - 1)?;
        let rhs = &prev.scale_variable(&q) + &prev.mul_t_power(1);
        if s.z(d)? != &rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
