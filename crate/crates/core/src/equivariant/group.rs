use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::{Error, Result};

/// Cap on the number of group elements produced by closure.
pub const GROUP_CAP: usize = 1_000_000;

/// A permutation group on `{0, ..., n-1}`, stored as its full element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Vec<usize>>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn validate(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "{perm:?} has length {} on a ground set of size {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection of 0..{n}"
            )));
        }
    }
    Ok(())
}

impl PermGroup {
    /// Closure of the generators under composition, with the identity first.
    pub fn generate(n: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::generate_capped(n, generators, GROUP_CAP)
    }

    pub fn generate_capped(n: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        for g in generators {
            validate(n, g)?;
        }
        let identity: Vec<usize> = (0..n).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut elements = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = compose(g, &elements[i]);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(Self { n, elements })
    }

    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            elements: vec![(0..n).collect()],
        }
    }

    /// The full symmetric group, from a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Ok(Self::trivial(n));
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::generate(n, &[swap, cycle])
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn inverse(perm: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; perm.len()];
        for (i, &x) in perm.iter().enumerate() {
            inv[x] = i;
        }
        inv
    }

    pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        compose(a, b)
    }

    /// Cycle lengths, sorted decreasingly.
    pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; perm.len()];
        let mut out = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Values of a (virtual) character, one per group element in the group's order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunctionTable {
    #[serde(serialize_with = "crate::polyarith::serialize_bigints")]
    pub values: Vec<BigInt>,
}

impl ClassFunctionTable {
    pub fn at_identity(&self) -> &BigInt {
        &self.values[0]
    }

    /// Whether the values are constant on conjugacy classes of `group`.
    pub fn is_class_function(&self, group: &PermGroup) -> bool {
        let index: HashMap<&[usize], usize> = group
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_slice(), i))
            .collect();
        group.elements.iter().all(|h| {
            let h_inv = PermGroup::inverse(h);
            group.elements.iter().enumerate().all(|(i, g)| {
                let conj = compose(&compose(h, g), &h_inv);
                self.values[index[conj.as_slice()]] == self.values[i]
            })
        })
    }

    /// Inner product with the trivial character, `(1/|G|) sum chi(g)`; `None` if not integral.
    pub fn trivial_multiplicity(&self) -> Option<BigInt> {
        let total: BigInt = self.values.iter().sum();
        let order = BigInt::from(self.values.len());
        (&total % &order == BigInt::from(0)).then(|| total / order)
    }
}
