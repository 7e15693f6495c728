//! Exact combinatorial numbers, all from triangle recurrences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows `0..=n_max` of a triangle `T(n, k)`, `0 <= k <= n`, built by
/// `T(n, k) = T(n-1, k-1) + f(n, k) T(n-1, k)` with `T(0, 0) = 1`.
fn triangle(n_max: usize, f: impl Fn(usize, usize) -> BigInt) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let diag = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    BigInt::zero()
                };
                let same = prev.get(k).map_or_else(BigInt::zero, |v| f(n, k) * v);
                diag + same
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn binomial_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    triangle(n_max, |_, _| BigInt::one())
}

pub fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    triangle(n_max, |_, k| BigInt::from(k))
}

/// Signed Stirling numbers of the first kind: `s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)`.
pub fn stirling1_signed_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    triangle(n_max, |n, _| -BigInt::from(n - 1))
}

/// Gaussian binomials: `[n, k]_q = [n-1, k-1]_q + q^k [n-1, k]_q`.
pub fn gaussian_triangle(n_max: usize, q: &BigInt) -> Vec<Vec<BigInt>> {
    let powers: Vec<BigInt> = (0..=n_max)
        .scan(BigInt::one(), |acc, _| {
            let v = acc.clone();
            *acc *= q;
            Some(v)
        })
        .collect();
    triangle(n_max, |_, k| powers[k].clone())
}

fn entry(rows: Vec<Vec<BigInt>>, n: usize, k: usize) -> BigInt {
    rows[n].get(k).cloned().unwrap_or_default()
}

fn in_range(n: i64, k: i64) -> Option<(usize, usize)> {
    (0 <= k && k <= n).then_some((n as usize, k as usize))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    in_range(n, k).map_or_else(BigInt::zero, |(n, k)| entry(binomial_triangle(n), n, k))
}

pub fn stirling2(n: i64, k: i64) -> BigInt {
    in_range(n, k).map_or_else(BigInt::zero, |(n, k)| entry(stirling2_triangle(n), n, k))
}

pub fn stirling1_signed(n: i64, k: i64) -> BigInt {
    in_range(n, k).map_or_else(BigInt::zero, |(n, k)| entry(stirling1_signed_triangle(n), n, k))
}

pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> BigInt {
    in_range(n, k).map_or_else(BigInt::zero, |(n, k)| {
        entry(gaussian_triangle(n, &BigInt::from(q)), n, k)
    })
}

/// `N(n, k) = binom(n, k) binom(n, k-1) / n` for `1 <= k <= n`, zero otherwise.
pub fn narayana(n: i64, k: i64) -> BigInt {
    if !(1 <= k && k <= n) {
        return BigInt::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigInt::from(n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Whether `q >= 2` is a power of a single prime.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..)
        .find(|p| q.is_multiple_of(*p))
        .expect("q >= 2 has a prime factor");
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    rest == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set_partitions(n: usize, k: usize) -> u64 {
        // restricted growth strings
        fn go(pos: usize, n: usize, used: usize, k: usize) -> u64 {
            if pos == n {
                return u64::from(used == k);
            }
            (0..=used.min(k - 1))
                .map(|b| go(pos + 1, n, used.max(b + 1), k))
                .sum()
        }
        if k == 0 {
            return u64::from(n == 0);
        }
        go(0, n, 0, k)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling1_signed(4, 4), BigInt::from(1));
        assert_eq!(stirling1_signed(4, 1), BigInt::from(-6));
        assert_eq!(stirling1_signed(4, 2), BigInt::from(11));
        assert_eq!(stirling2(3, 5), BigInt::from(0));
        assert_eq!(stirling2(3, -1), BigInt::from(0));
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(stirling2(n as i64, k as i64), BigInt::from(set_partitions(n, k)));
            }
        }
    }

    #[test]
    fn gaussian_and_narayana_examples() {
        assert_eq!(gaussian_binomial(2, 1, 2), BigInt::from(3));
        assert_eq!(gaussian_binomial(4, 2, 2), BigInt::from(35));
        assert_eq!(narayana(4, 2), BigInt::from(6));
        assert_eq!(narayana(3, 2), BigInt::from(3));
        assert_eq!(narayana(7, 1), BigInt::from(1));
        assert_eq!(narayana(3, 0), BigInt::from(0));
        assert_eq!(narayana(3, 4), BigInt::from(0));
    }

    #[test]
    fn prime_powers() {
        let yes = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 1024];
        let no = [0, 1, 6, 10, 12, 15, 18, 100];
        assert!(yes.iter().all(|&q| is_prime_power(q)));
        assert!(no.iter().all(|&q| !is_prime_power(q)));
    }

    proptest! {
        #[test]
        fn gaussian_at_one_is_binomial(n in 0i64..20, k in 0i64..20) {
            prop_assert_eq!(gaussian_binomial(n, k, 1), binomial(n, k));
        }

        #[test]
        fn stirling_inversion(n in 0usize..12) {
            // sum_k S(n, k) s(k, j) = [n = j]
            let big = stirling2_triangle(n);
            let small = stirling1_signed_triangle(n);
            for j in 0..=n {
                let total: BigInt = (j..=n).map(|k| &big[n][k] * &small[k][j]).sum();
                prop_assert_eq!(total, BigInt::from(u8::from(j == n)));
            }
        }

        #[test]
        fn narayana_rows_sum_to_catalan(n in 1i64..25) {
            let total: BigInt = (1..=n).map(|k| narayana(n, k)).sum();
            prop_assert_eq!(total, binomial(2 * n, n) / BigInt::from(n + 1));
        }
    }
}
