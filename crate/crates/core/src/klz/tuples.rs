//! Summation domain of the alternating Whitney-number formula.

use serde::Serialize;

/// `t_j(S) = min { k >= j : k not in S }`, where `S` is a subset of `{1, ..., r}`.
///
/// Always lands in `1..=r+1`; `j = r + 1` is allowed and returns `r + 1`.
pub fn t_index(j: usize, subset: &[usize], r: usize) -> usize {
    (j..=r + 1).find(|k| !subset.contains(k)).unwrap_or(r + 1)
}

/// One term `(r, S, a)` of the closed formula for the coefficient `c(i)`:
/// `S` is a subset of `{1, ..., r}` and `0 = a_0 < a_1 < ... < a_r = i < a_{r+1} = rk - i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexTuple {
    pub r: usize,
    pub subset: Vec<usize>,
    pub a: Vec<i64>,
}

impl IndexTuple {
    pub fn t(&self, j: usize) -> usize {
        t_index(j, &self.subset, self.r)
    }

    /// `(-1)^{|S|}`.
    pub fn sign(&self) -> i64 {
        if self.subset.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The Whitney profile `[i_r, ..., i_1]` with `i_j = a_{t_j(S)} + a_{j-1}`.
    pub fn profile(&self) -> Vec<i64> {
        (1..=self.r)
            .rev()
            .map(|j| self.a[self.t(j)] + self.a[j - 1])
            .collect()
    }
}

/// All index tuples contributing to `c(i)` for a matroid of rank `rk`.
///
/// There are `2 * 3^{i-1}` of them when `rk > 2i` and none otherwise.
pub fn enumerate_index_tuples(i: usize, rk: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    if i == 0 || 2 * i >= rk {
        return out;
    }
    let top = (rk - i) as i64;
    for r in 1..=i {
        for_each_combination(i - 1, r - 1, &mut |interior: &[usize]| {
            let mut a = Vec::with_capacity(r + 2);
            a.push(0);
            a.extend(interior.iter().map(|&x| x as i64));
            a.push(i as i64);
            a.push(top);
            for mask in 0u64..1 << r {
                let subset = (1..=r).filter(|k| mask >> (k - 1) & 1 == 1).collect();
                out.push(IndexTuple {
                    r,
                    subset,
                    a: a.clone(),
                });
            }
        });
    }
    out
}

/// Calls `f` with every increasing `k`-subset of `{1, ..., n}`.
fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(1, n, k, &mut Vec::with_capacity(k), f);
}
