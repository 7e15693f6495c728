use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::One;

use super::numbers::{binomial_triangle, gaussian_triangle, stirling1_signed_triangle, stirling2_triangle};
use super::NiceFamily;
use crate::{Error, Result};

/// Flat counts `W_d(k)` and characteristic coefficients `w_d(k)` by corank,
/// for `0 <= k <= d <= d_max`.
#[derive(Clone, Debug)]
pub struct WhitneyTables {
    family: NiceFamily,
    d_max: usize,
    big_w: Vec<Vec<BigInt>>,
    small_w: Vec<Vec<BigInt>>,
}

fn sign(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl WhitneyTables {
    pub fn build(family: NiceFamily, d_max: usize) -> Result<Self> {
        family.validate()?;
        let (big_w, small_w) = match family {
            NiceFamily::Braid => braid(d_max),
            NiceFamily::TypeB => type_b(d_max),
            NiceFamily::Uniform(m) => uniform(m as usize, d_max),
            NiceFamily::QVec(q) => qvec(q, d_max),
        };
        Ok(Self {
            family,
            d_max,
            big_w,
            small_w,
        })
    }

    pub fn family(&self) -> NiceFamily {
        self.family
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub(crate) fn check_rank(&self, d: usize) -> Result<()> {
        if d > self.d_max {
            return Err(Error::RangeExceeded { d, d_max: self.d_max });
        }
        Ok(())
    }

    /// `W_d(k)`, zero when `k` lies outside `0..=d`.
    pub fn whitney(&self, d: usize, k: i64) -> Result<BigInt> {
        self.check_rank(d)?;
        Ok(get(&self.big_w[d], k))
    }

    /// `w_d(k)`, zero when `k` lies outside `0..=d`.
    pub fn char_coeff(&self, d: usize, k: i64) -> Result<BigInt> {
        self.check_rank(d)?;
        Ok(get(&self.small_w[d], k))
    }

    pub(crate) fn whitney_row(&self, d: usize) -> &[BigInt] {
        &self.big_w[d]
    }

    pub(crate) fn char_row(&self, d: usize) -> &[BigInt] {
        &self.small_w[d]
    }

    /// Rows `family,d,k,W,w` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,d,k,W,w\n");
        for d in 0..=self.d_max {
            for k in 0..=d {
                writeln!(
                    out,
                    "{},{d},{k},{},{}",
                    self.family, self.big_w[d][k], self.small_w[d][k]
                )
                .expect("writing to a String cannot fail");
            }
        }
        out
    }
}

fn get(row: &[BigInt], k: i64) -> BigInt {
    usize::try_from(k)
        .ok()
        .and_then(|k| row.get(k))
        .cloned()
        .unwrap_or_default()
}

type Tables = (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>);

fn braid(d_max: usize) -> Tables {
    let s2 = stirling2_triangle(d_max + 1);
    let s1 = stirling1_signed_triangle(d_max + 1);
    let shift =
        |t: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> { (0..=d_max).map(|d| t[d + 1][1..].to_vec()).collect() };
    (shift(&s2), shift(&s1))
}

fn type_b(d_max: usize) -> Tables {
    let s2 = stirling2_triangle(d_max);
    let s1 = stirling1_signed_triangle(d_max);
    let c = binomial_triangle(d_max);
    let two = BigInt::from(2);
    let big_w = (0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|k| {
                    (k..=d)
                        .map(|j| two.pow((j - k) as u32) * &c[d][j] * &s2[j][k])
                        .sum()
                })
                .collect()
        })
        .collect();
    let minus_two = BigInt::from(-2);
    let small_w = (0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|k| {
                    let total: BigInt = (k..=d)
                        .map(|j| minus_two.pow((d - j) as u32) * &c[j][k] * &s1[d][j])
                        .sum();
                    sign(d - k) * total
                })
                .collect()
        })
        .collect();
    (big_w, small_w)
}

fn uniform(m: usize, d_max: usize) -> Tables {
    let c = binomial_triangle(d_max + m);
    let big_w = (0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|k| {
                    if k == 0 {
                        BigInt::one()
                    } else {
                        c[d + m][k + m].clone()
                    }
                })
                .collect()
        })
        .collect();
    let small_w = (0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|k| {
                    if k > 0 || d == 0 {
                        sign(d - k) * &c[d + m][k + m]
                    } else {
                        (0..=m).map(|j| sign(d + j) * &c[d + m][d + j]).sum()
                    }
                })
                .collect()
        })
        .collect();
    (big_w, small_w)
}

fn qvec(q: u64, d_max: usize) -> Tables {
    let q = BigInt::from(q);
    let g = gaussian_triangle(d_max, &q);
    let small_w = (0..=d_max)
        .map(|d| {
            (0..=d)
                .map(|k| {
                    let e = (d - k) * (d - k).saturating_sub(1) / 2;
                    sign(d - k) * q.pow(e as u32) * &g[d][k]
                })
                .collect()
        })
        .collect();
    (g, small_w)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    fn w(t: &WhitneyTables, d: usize, k: i64) -> i64 {
        t.whitney(d, k).unwrap().try_into().unwrap()
    }

    fn cw(t: &WhitneyTables, d: usize, k: i64) -> i64 {
        t.char_coeff(d, k).unwrap().try_into().unwrap()
    }

    #[test]
    fn table_examples() {
        let braid = WhitneyTables::build(NiceFamily::Braid, 5).unwrap();
        assert_eq!((w(&braid, 3, 1), w(&braid, 3, 2)), (7, 6));
        // (t-1)(t-2)(t-3)
        assert_eq!(
            (0..=3).map(|k| cw(&braid, 3, k)).collect::<Vec<_>>(),
            [-6, 11, -6, 1]
        );
        let u1 = WhitneyTables::build(NiceFamily::Uniform(1), 5).unwrap();
        assert_eq!((w(&u1, 3, 1), w(&u1, 3, 0)), (6, 1));
        let q2 = WhitneyTables::build(NiceFamily::QVec(2), 5).unwrap();
        assert_eq!(w(&q2, 2, 1), 3);
        // (t-1)(t-2)
        assert_eq!((0..=2).map(|k| cw(&q2, 2, k)).collect::<Vec<_>>(), [2, -3, 1]);
        let b = WhitneyTables::build(NiceFamily::TypeB, 5).unwrap();
        // (t-1)(t-3) and 4 lines, as in the B2 arrangement
        assert_eq!((0..=2).map(|k| cw(&b, 2, k)).collect::<Vec<_>>(), [3, -4, 1]);
        assert_eq!((0..=2).map(|k| w(&b, 2, k)).collect::<Vec<_>>(), [1, 4, 1]);
    }

    #[test]
    fn range_and_out_of_range_entries() {
        let t = WhitneyTables::build(NiceFamily::Braid, 3).unwrap();
        assert_eq!(w(&t, 3, 4), 0);
        assert_eq!(w(&t, 3, -1), 0);
        assert!(matches!(
            t.whitney(4, 0),
            Err(Error::RangeExceeded { d: 4, d_max: 3 })
        ));
        assert!(WhitneyTables::build(NiceFamily::QVec(6), 3).is_err());
        assert!(WhitneyTables::build(NiceFamily::Uniform(0), 3).is_err());
    }

    #[test]
    fn row_invariants() {
        for family in [
            NiceFamily::Braid,
            NiceFamily::TypeB,
            NiceFamily::Uniform(1),
            NiceFamily::Uniform(4),
            NiceFamily::QVec(3),
        ] {
            let t = WhitneyTables::build(family, 15).unwrap();
            for d in 0..=15 {
                assert!(
                    t.whitney_row(d)[0].is_one() && t.whitney_row(d)[d].is_one(),
                    "{family}"
                );
                assert!(t.char_row(d)[d].is_one(), "{family}");
                let at_one: BigInt = t.char_row(d).iter().sum();
                assert_eq!(at_one.is_zero(), d >= 1, "{family} d = {d}");
            }
        }
    }

    #[test]
    fn csv_export() {
        let csv = WhitneyTables::build(NiceFamily::Uniform(2), 2).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "family,d,k,W,w");
        assert_eq!(lines.len(), 1 + 6);
        assert_eq!(lines[6], "uniform:2,2,2,1,1");
    }
}
