use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::RatPolynomial;
use crate::{Error, Result};

/// Default truncation order for generating-series checks.
pub const DEFAULT_ORDER: usize = 12;

/// Power series in `u` with coefficients in `Q[t]`, truncated after `u^order`.
///
/// Binary operations on series of different orders yield a series of the
/// smaller order, which is the precision actually known.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<RatPolynomial>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<RatPolynomial>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.last().is_some_and(RatPolynomial::is_zero) {
            coeffs.pop();
        }
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, RatPolynomial::one())
    }

    pub fn constant(order: usize, c: RatPolynomial) -> Self {
        Self::new(order, vec![c])
    }

    /// Builds a series from `(power of u, coefficient)` pairs.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, RatPolynomial)>) -> Self {
        let mut coeffs = vec![RatPolynomial::zero(); order + 1];
        for (k, c) in terms {
            if k <= order {
                coeffs[k] = &coeffs[k] + &c;
            }
        }
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> RatPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[RatPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs.clone())
    }

    pub fn scale(&self, c: &RatPolynomial) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Divides every coefficient by `t^power`; fails unless exact.
    pub fn div_t_power(&self, power: usize) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c.div_t_power(power).ok_or(Error::NotDivisible {
                    power: k,
                    shift: power,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.order, coeffs))
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn constant_term(&self) -> RatPolynomial {
        self.coeff(0)
    }

    fn require_unit_constant(&self, op: &'static str) -> Result<()> {
        if self.constant_term().is_one() {
            Ok(())
        } else {
            Err(Error::ConstantTerm { op, expected: "1" })
        }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inv(&self) -> Result<Self> {
        self.require_unit_constant("series_inv")?;
        let n = self.order;
        let mut b: Vec<RatPolynomial> = vec![RatPolynomial::one()];
        for m in 1..=n {
            let mut acc = RatPolynomial::zero();
            for k in 1..=m.min(self.coeffs.len().saturating_sub(1)) {
                acc = &acc + &(&self.coeffs[k] * &b[m - k]);
            }
            b.push(-&acc);
        }
        Ok(Self::new(n, b))
    }

    /// Logarithm of a series with constant term 1, from `m l_m = m a_m - sum k l_k a_{m-k}`.
    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant("series_log")?;
        let n = self.order;
        let a = |k: usize| self.coeffs.get(k).cloned().unwrap_or_default();
        let mut l: Vec<RatPolynomial> = vec![RatPolynomial::zero()];
        for m in 1..=n {
            let mut acc = a(m).scale(&int_ratio(m, 1));
            for k in 1..m {
                acc = &acc - &(&l[k] * &a(m - k)).scale(&int_ratio(k, 1));
            }
            l.push(acc.scale(&int_ratio(1, m)));
        }
        Ok(Self::new(n, l))
    }

    /// Exponential of a series with constant term 0, from `m e_m = sum k a_k e_{m-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "series_exp",
                expected: "0",
            });
        }
        let n = self.order;
        let a = |k: usize| self.coeffs.get(k).cloned().unwrap_or_default();
        let mut e: Vec<RatPolynomial> = vec![RatPolynomial::one()];
        for m in 1..=n {
            let mut acc = RatPolynomial::zero();
            for k in 1..=m {
                let ak = a(k);
                if !ak.is_zero() {
                    acc = &acc + &(&ak * &e[m - k]).scale(&int_ratio(k, 1));
                }
            }
            e.push(acc.scale(&int_ratio(1, m)));
        }
        Ok(Self::new(n, e))
    }

    /// `s^{-1/2}` for a series with constant term 1.
    pub fn sqrt_inv(&self) -> Result<Self> {
        self.require_unit_constant("series_sqrt_inv")?;
        self.real_power(&BigRational::new(BigInt::from(-1), BigInt::from(2)))
    }

    /// `s^alpha` for constant term 1 via `m b_m = sum ((alpha + 1) k - m) a_k b_{m-k}`.
    fn real_power(&self, alpha: &BigRational) -> Result<Self> {
        let n = self.order;
        let a = |k: usize| self.coeffs.get(k).cloned().unwrap_or_default();
        let alpha1 = alpha + BigRational::one();
        let mut b: Vec<RatPolynomial> = vec![RatPolynomial::one()];
        for m in 1..=n {
            let mut acc = RatPolynomial::zero();
            for k in 1..=m {
                let ak = a(k);
                if ak.is_zero() {
                    continue;
                }
                let weight = &alpha1 * int_ratio(k, 1) - int_ratio(m, 1);
                acc = &acc + &(&ak * &b[m - k]).scale(&weight);
            }
            b.push(acc.scale(&int_ratio(1, m)));
        }
        Ok(Self::new(n, b))
    }
}

fn int_ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        TruncatedSeries::new(order, coeffs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![RatPolynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncatedSeries::new(order, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPolynomial;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> RatPolynomial {
        RatPolynomial::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn univariate(order: usize, c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(order, c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn mercator() {
        let s = univariate(3, &[(1, 1), (1, 1)]);
        assert_eq!(
            s.log().unwrap(),
            univariate(3, &[(0, 1), (1, 1), (-1, 2), (1, 3)])
        );
    }

    #[test]
    fn exp_inverts_log() {
        let s = univariate(8, &[(1, 1), (1, 1)]);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn sqrt_inv_binomial() {
        let s = univariate(2, &[(1, 1), (2, 1)]);
        let r = s.sqrt_inv().unwrap();
        assert_eq!(r, univariate(2, &[(1, 1), (-1, 1), (3, 2)]));
        // squaring gives back the inverse
        assert_eq!(&(&r * &r) * &s, TruncatedSeries::one(2));
    }

    #[test]
    fn constant_term_preconditions() {
        let s = univariate(3, &[(2, 1), (1, 1)]);
        assert!(s.log().is_err());
        assert!(s.inv().is_err());
        assert!(s.sqrt_inv().is_err());
        assert!(s.exp().is_err());
        assert!(univariate(3, &[(0, 1), (1, 1)]).exp().is_ok());
    }

    #[test]
    fn polynomial_coefficients_in_t() {
        // log(1 + t u) / t is u - t u^2 / 2 + ...
        let tu = TruncatedSeries::new(
            4,
            vec![
                RatPolynomial::one(),
                IntPolynomial::from_i64s(&[0, 1]).to_rational(),
            ],
        );
        let l = tu.log().unwrap().div_t_power(1).unwrap();
        assert_eq!(l.coeff(1), RatPolynomial::one());
        assert_eq!(
            l.coeff(2),
            IntPolynomial::from_i64s(&[0, 1])
                .to_rational()
                .scale(&BigRational::new((-1).into(), 2.into()))
        );
        assert!(tu.log().unwrap().div_t_power(2).is_err());
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(prop::collection::vec(-4i64..5, 0..3), 0..5).prop_map(|tail| {
            let mut coeffs = vec![RatPolynomial::one()];
            coeffs.extend(tail.iter().map(|c| IntPolynomial::from_i64s(c).to_rational()));
            TruncatedSeries::new(6, coeffs)
        })
    }

    proptest! {
        #[test]
        fn exp_log_roundtrip(s in unit_series()) {
            prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
        }

        #[test]
        fn inverse_is_inverse(s in unit_series()) {
            prop_assert_eq!(&s * &s.inv().unwrap(), TruncatedSeries::one(6));
        }
    }
}
