use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of an integer matrix (rows are vectors) by fraction-free Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact and no rationals appear.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, BigInt::zero());
            r
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Plain Gaussian elimination over Q, the independent oracle.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                let mut v: Vec<BigRational> = r.iter().map(|&x| BigRational::from(BigInt::from(x))).collect();
                v.resize(ncols, BigRational::zero());
                v
            })
            .collect();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][col].is_zero() {
                    let f = &m[i][col] / &m[rank][col];
                    for j in 0..ncols {
                        let v = &f * &m[rank][j];
                        m[i][j] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn type_b2_vectors() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]];
        assert_eq!(bareiss_rank(&big(&rows)), 2);
        assert_eq!(bareiss_rank(&big(&[vec![2, 4], vec![1, 2]])), 1);
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&big(&[vec![0, 0, 0]])), 0);
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 0..6)
        ) {
            prop_assert_eq!(bareiss_rank(&big(&rows)), rational_rank(&rows));
        }
    }
}
