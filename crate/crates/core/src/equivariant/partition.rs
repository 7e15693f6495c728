use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::families::binomial;

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j] - i - 1;
                hooks *= arm + leg + 1;
            }
        }
        crate::families::factorial(self.size()) / hooks
    }

    /// `n! / prod lambda_i!`.
    pub fn multinomial(&self) -> BigInt {
        let mut remaining = self.size() as i64;
        let mut out = BigInt::one();
        for &p in &self.0 {
            out *= binomial(remaining, p as i64);
            remaining -= p as i64;
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let len = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..len)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_counts() {
        assert_eq!(Partition::new(vec![1, 0, 2, 1]).parts(), &[2, 1, 1]);
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(Partition::new(vec![3, 1]).conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(Partition::new(vec![2, 2]).standard_tableaux(), BigInt::from(2));
        assert_eq!(Partition::new(vec![3, 1]).standard_tableaux(), BigInt::from(3));
        assert_eq!(Partition::new(vec![2, 2]).multinomial(), BigInt::from(6));
        // sum of squares of dimensions is n!
        for n in 0..9 {
            let total: BigInt = Partition::all(n)
                .iter()
                .map(|p| p.standard_tableaux().pow(2))
                .sum();
            assert_eq!(total, crate::families::factorial(n));
        }
    }

    #[test]
    fn display() {
        assert_eq!(Partition::new(vec![2, 2]).to_string(), "[2,2]");
        assert_eq!(Partition::default().to_string(), "[]");
    }
}
