use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::Partition;
use crate::polyarith::bigint_to_json;
use crate::{Error, Result};

/// Largest degree for which Schur expansions are computed.
pub const SCHUR_DEGREE_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Complete homogeneous `h_lambda`.
    H,
    Schur,
}

/// A homogeneous symmetric function with integer coefficients in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunction {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFunction {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        Self {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(basis: Basis, partition: Partition, coeff: BigInt) -> Self {
        let mut f = Self::zero(basis, partition.size());
        f.add_term(partition, coeff);
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, partition: &Partition) -> BigInt {
        self.terms.get(partition).cloned().unwrap_or_default()
    }

    /// Adds `coeff` times the basis element; panics if the degree differs.
    pub fn add_term(&mut self, partition: Partition, coeff: BigInt) {
        assert_eq!(partition.size(), self.degree, "inhomogeneous term");
        let entry = self.terms.entry(partition).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &SymFunction, factor: &BigInt) -> Result<()> {
        if other.is_zero() {
            return Ok(());
        }
        if self.is_zero() && self.basis == other.basis {
            self.degree = other.degree;
        }
        if other.degree != self.degree {
            return Err(Error::HomogeneousDegree {
                expected: self.degree,
                found: other.degree,
            });
        }
        assert_eq!(self.basis, other.basis, "mixed bases");
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * factor);
        }
        Ok(())
    }

    /// Representation dimension of the degree-`n` function: multinomials for
    /// `h_lambda`, standard tableau counts for `s_lambda`.
    pub fn dimension(&self, n: usize) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        if self.degree != n {
            return Err(Error::HomogeneousDegree {
                expected: n,
                found: self.degree,
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(p, c)| {
                c * match self.basis {
                    Basis::H => p.multinomial(),
                    Basis::Schur => p.standard_tableaux(),
                }
            })
            .sum())
    }

    /// `h_lambda = sum_mu K_{mu lambda} s_mu`.
    pub fn to_schur(&self) -> Result<SymFunction> {
        if self.basis == Basis::Schur {
            return Ok(self.clone());
        }
        if self.degree > SCHUR_DEGREE_BOUND {
            return Err(Error::SymDegree {
                degree: self.degree,
                bound: SCHUR_DEGREE_BOUND,
            });
        }
        let mut out = SymFunction::zero(Basis::Schur, self.degree);
        let mut kostka = Kostka::default();
        let shapes = Partition::all(self.degree);
        for (lambda, c) in &self.terms {
            for mu in &shapes {
                let k = kostka.count(mu, lambda.parts());
                if !k.is_zero() {
                    out.add_term(mu.clone(), c * k);
                }
            }
        }
        Ok(out)
    }

    pub fn is_schur_positive(&self) -> Result<bool> {
        Ok(self.to_schur()?.terms.values().all(|c| !c.is_negative()))
    }
}

/// Product `h_{p_1} h_{p_2} ...` as a single `h_lambda`; zero parts are dropped.
pub fn h_product(parts: &[i64]) -> Result<SymFunction> {
    let mut positive = Vec::with_capacity(parts.len());
    for &p in parts {
        if p < 0 {
            return Err(Error::NegativePart(p));
        }
        positive.push(p as usize);
    }
    Ok(SymFunction::term(
        Basis::H,
        Partition::new(positive),
        BigInt::from(1),
    ))
}

pub fn h_to_schur(f: &SymFunction) -> Result<SymFunction> {
    f.to_schur()
}

pub fn dimension(f: &SymFunction, n: usize) -> Result<BigInt> {
    f.dimension(n)
}

pub fn is_schur_positive(f: &SymFunction) -> Result<bool> {
    f.is_schur_positive()
}

/// Kostka numbers: semistandard tableaux of shape `mu` and content `content`,
/// built by peeling off the largest entry as a horizontal strip.
#[derive(Default)]
struct Kostka {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl Kostka {
    fn count(&mut self, shape: &Partition, content: &[usize]) -> BigInt {
        self.count_raw(shape.parts().to_vec(), content)
    }

    fn count_raw(&mut self, shape: Vec<usize>, content: &[usize]) -> BigInt {
        let size: usize = shape.iter().sum();
        let total: usize = content.iter().sum();
        if size != total {
            return BigInt::zero();
        }
        let Some((&last, rest)) = content.split_last() else {
            return BigInt::from(u8::from(size == 0));
        };
        let key = (shape.clone(), content.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for inner in horizontal_strips_removed(&shape, last) {
            total += self.count_raw(inner, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Shapes `nu` with `shape / nu` a horizontal strip of `k` cells.
fn horizontal_strips_removed(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(shape: &[usize], row: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == shape.len() {
            if left == 0 {
                let mut nu = current.clone();
                while nu.last() == Some(&0) {
                    nu.pop();
                }
                out.push(nu);
            }
            return;
        }
        // nu_row must be at least shape_{row+1} (horizontal strip) and at most shape_row
        let floor = shape.get(row + 1).copied().unwrap_or(0);
        let top = shape[row];
        for removed in 0..=left.min(top - floor) {
            current.push(top - removed);
            go(shape, row + 1, left - removed, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for SymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let letter = match self.basis {
            Basis::H => "h",
            Basis::Schur => "s",
        };
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if magnitude != BigInt::from(1) {
                write!(f, "{magnitude}·")?;
            }
            write!(f, "{letter}{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunction({self})")
    }
}

impl Serialize for SymFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coeff: serde_json::Value,
        }
        let terms: Vec<Term<'_>> = self
            .terms
            .iter()
            .map(|(partition, coeff)| Term {
                partition,
                coeff: bigint_to_json(coeff),
            })
            .collect();
        let mut st = serializer.serialize_struct("SymFunction", 4)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl SymFunction {
    /// Character value at a permutation of the given cycle type, for a function
    /// in the `h` basis: `h_lambda` is the permutation character on ordered set
    /// partitions with block sizes `lambda`.
    pub fn h_character(&self, cycle_type: &[usize]) -> Result<BigInt> {
        if self.basis != Basis::H {
            return Err(Error::InvalidSpec(
                "character evaluation needs the h basis".to_string(),
            ));
        }
        let n: usize = cycle_type.iter().sum();
        if !self.is_zero() && n != self.degree {
            return Err(Error::HomogeneousDegree {
                expected: self.degree,
                found: n,
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(p, c)| c * BigInt::from(fixed_block_assignments(cycle_type, p.parts())))
            .sum())
    }
}

/// Ways to send each cycle into one of the blocks so that block `k` receives exactly
/// `blocks[k]` points.
fn fixed_block_assignments(cycles: &[usize], blocks: &[usize]) -> u128 {
    fn go(cycles: &[usize], caps: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u128>) -> u128 {
        let Some((&c, rest)) = cycles.split_first() else {
            return u128::from(caps.iter().all(|&x| x == 0));
        };
        let key = (cycles.len(), caps.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for k in 0..caps.len() {
            if caps[k] >= c {
                caps[k] -= c;
                total += go(rest, caps, memo);
                caps[k] += c;
            }
        }
        memo.insert(key, total);
        total
    }
    go(cycles, &mut blocks.to_vec(), &mut HashMap::new())
}
