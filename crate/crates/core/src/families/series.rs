//! Generating-series identities for the families, checked to a finite order in `u`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::numbers::factorial;
use super::{FamilySolver, NiceFamily, WhitneyTables};
use crate::polyarith::{RatPolynomial, TruncatedSeries};
use crate::{Error, IntPolynomial, Result};

/// Largest truncation order accepted by the series checks.
pub const MAX_SERIES_ORDER: usize = 16;

/// Outcome of the generating-series checks for one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub family: NiceFamily,
    pub order: usize,
    /// `P(t,u) = sum_k t^{-k} Z_k(t) g_k(tu)` with `g_k` read from the tables.
    pub ordinary_p: bool,
    /// `Z(t,u) = sum_k t^{-k} P_k(t) G_k(tu)` with `G_k` read from the tables.
    pub ordinary_z: bool,
    /// Exponential `P` identity with the closed-form `g~_k`; `None` when no closed form is known.
    pub exponential_p: Option<bool>,
    /// Exponential `Z` identity with the closed-form `G~_k`.
    pub exponential_z: Option<bool>,
    /// Closed-form `g~_k` and `G~_k` reproduce the tables coefficientwise.
    pub closed_forms_match_tables: Option<bool>,
}

impl SeriesReport {
    pub fn all_hold(&self) -> bool {
        self.ordinary_p
            && self.ordinary_z
            && [
                self.exponential_p,
                self.exponential_z,
                self.closed_forms_match_tables,
            ]
            .into_iter()
            .all(|v| v != Some(false))
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn poly_series(order: usize, polys: &[IntPolynomial], exponential: bool) -> TruncatedSeries {
    TruncatedSeries::from_terms(
        order,
        polys.iter().enumerate().map(|(d, p)| {
            let c = RatPolynomial::from(p);
            let c = if exponential {
                c.scale(&BigRational::new(BigInt::one(), factorial(d)))
            } else {
                c
            };
            (d, c)
        }),
    )
}

/// `sum_k a_k(t) s(t,u)^k / k!`, where `s` is already divided by the `t`-power.
fn weighted_powers(order: usize, base: &TruncatedSeries, weights: &[IntPolynomial]) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    let mut power = TruncatedSeries::one(order);
    for (k, a) in weights.iter().enumerate() {
        let term = power
            .scale(&RatPolynomial::from(a))
            .scale_rational(&BigRational::new(BigInt::one(), factorial(k)));
        total = &total + &term;
        power = &power * base;
    }
    total
}

/// The closed-form ingredients `(prefactor_g, base_g, prefactor_G, base_G)` with
/// `g~_k(tu) / t^k = prefactor_g base_g^k / k!` and likewise for `G~_k`.
fn closed_forms(family: NiceFamily, order: usize) -> Result<Option<[TruncatedSeries; 4]>> {
    let scale: i64 = match family {
        NiceFamily::Braid => 1,
        NiceFamily::TypeB => 2,
        _ => return Ok(None),
    };
    let tu = |c: i64| TruncatedSeries::from_terms(order, [(1, RatPolynomial::monomial(rat(c, 1), 1))]);
    let one_plus = &TruncatedSeries::one(order) + &tu(scale);
    let prefactor_g = if scale == 1 {
        one_plus.inv()?
    } else {
        one_plus.sqrt_inv()?
    };
    let base_g = one_plus.log()?.div_t_power(1)?.scale_rational(&rat(1, scale));
    let prefactor_big = tu(1).exp()?;
    let base_big = (&tu(scale).exp()? - &TruncatedSeries::one(order))
        .div_t_power(1)?
        .scale_rational(&rat(1, scale));
    Ok(Some([prefactor_g, base_g, prefactor_big, base_big]))
}

/// `sum_k t^{-k} a_k(t) f_k(tu)` where `f_k(x) = sum_d table_d(k) x^d`
/// (or `x^d / d!` when `exponential`).
fn table_sum(
    order: usize,
    weights: &[IntPolynomial],
    row: impl Fn(usize) -> Vec<BigInt>,
    exponential: bool,
) -> TruncatedSeries {
    let mut terms = Vec::new();
    for d in 0..=order {
        let entries = row(d);
        let mut coeff = RatPolynomial::zero();
        for (k, a) in weights.iter().enumerate().take(d + 1) {
            let c = RatPolynomial::from(&a.scale(&entries[k]).mul_t_power(d - k));
            coeff = &coeff + &c;
        }
        if exponential {
            coeff = coeff.scale(&BigRational::new(BigInt::one(), factorial(d)));
        }
        terms.push((d, coeff));
    }
    TruncatedSeries::from_terms(order, terms)
}

pub fn series_identity_report(family: NiceFamily, order: usize) -> Result<SeriesReport> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::RangeExceeded {
            d: order,
            d_max: MAX_SERIES_ORDER,
        });
    }
    let solver = FamilySolver::new(WhitneyTables::build(family, order)?);
    let p: Vec<IntPolynomial> = (0..=order)
        .map(|d| solver.kl(d).cloned())
        .collect::<Result<_>>()?;
    let z: Vec<IntPolynomial> = (0..=order).map(|d| solver.z(d).cloned()).collect::<Result<_>>()?;
    let tables = solver.tables();
    let char_row = |d: usize| tables.char_row(d).to_vec();
    let whitney_row = |d: usize| tables.whitney_row(d).to_vec();

    let ordinary_p = table_sum(order, &z, char_row, false) == poly_series(order, &p, false);
    let ordinary_z = table_sum(order, &p, whitney_row, false) == poly_series(order, &z, false);

    let mut report = SeriesReport {
        family,
        order,
        ordinary_p,
        ordinary_z,
        exponential_p: None,
        exponential_z: None,
        closed_forms_match_tables: None,
    };
    if let Some([pre_g, base_g, pre_big, base_big]) = closed_forms(family, order)? {
        let p_tilde = poly_series(order, &p, true);
        let z_tilde = poly_series(order, &z, true);
        report.exponential_p = Some(&pre_g * &weighted_powers(order, &base_g, &z) == p_tilde);
        report.exponential_z = Some(&pre_big * &weighted_powers(order, &base_big, &p) == z_tilde);
        report.closed_forms_match_tables = Some(
            closed_forms_match(order, &pre_g, &base_g, |d, k| tables.char_row(d)[k].clone())
                && closed_forms_match(order, &pre_big, &base_big, |d, k| {
                    tables.whitney_row(d)[k].clone()
                }),
        );
    }
    Ok(report)
}

/// Checks `[u^d] prefactor base^k / k! = table(d, k) t^{d-k} / d!` for all `k <= d <= order`.
fn closed_forms_match(
    order: usize,
    prefactor: &TruncatedSeries,
    base: &TruncatedSeries,
    table: impl Fn(usize, usize) -> BigInt,
) -> bool {
    let mut power = prefactor.clone();
    for k in 0..=order {
        let series = power.scale_rational(&BigRational::new(BigInt::one(), factorial(k)));
        for d in 0..=order {
            let expected = if d >= k {
                RatPolynomial::monomial(BigRational::new(table(d, k), factorial(d)), d - k)
            } else {
                RatPolynomial::zero()
            };
            if series.coeff(d) != expected {
                return false;
            }
        }
        power = &power * base;
    }
    true
}

/// Whether every generating-series identity available for `family` holds to `order`.
pub fn series_identity_check(family: NiceFamily, order: usize) -> Result<bool> {
    Ok(series_identity_report(family, order)?.all_hold())
}
