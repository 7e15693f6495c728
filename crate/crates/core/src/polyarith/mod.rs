//! Exact polynomial and truncated power-series arithmetic.
//!
//! Everything here is dense: the polynomials that occur (Kazhdan-Lusztig,
//! Z- and characteristic polynomials) have degree at most a few dozen but
//! coefficients with hundreds of digits.

mod int_poly;
mod rat_poly;
mod series;

pub use int_poly::{bigint_from_json, bigint_to_json, IntPolynomial};
pub(crate) use int_poly::{serialize_bigint, serialize_bigints};
pub use rat_poly::RatPolynomial;
pub use series::{TruncatedSeries, DEFAULT_ORDER};
