use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, IntPolynomial, Result};

/// Halvings allowed while refining one isolating interval.
pub const REFINEMENT_CAP: usize = 512;

/// The rational `num / 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn integer(n: BigInt) -> Self {
        Self { num: n, exp: 0 }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.exp)
    }

    fn at_exp(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp)
    }

    /// `lo + (hi - lo) * k / 2^bits`.
    fn between(lo: &Dyadic, hi: &Dyadic, k: u64, bits: u32) -> Dyadic {
        let exp = lo.exp.max(hi.exp) + bits;
        let (a, b) = (lo.at_exp(exp), hi.at_exp(exp));
        let num = &a + (((&b - &a) * k) >> bits);
        Dyadic { num, exp }.reduced()
    }

    fn reduced(mut self) -> Self {
        while self.exp > 0 && !self.num.bit(0) {
            self.num >>= 1;
            self.exp -= 1;
        }
        if self.num.is_zero() {
            self.exp = 0;
        }
        self
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.at_exp(exp).cmp(&other.at_exp(exp))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Half-open interval `(lo, hi]` holding exactly one root of a square-free polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

pub(crate) fn sign_at(p: &IntPolynomial, x: &Dyadic) -> i8 {
    p.sign_at_dyadic(&x.num, x.exp)
}

/// `|lc(b)|^{k} a - q b` with the positive multiplier chosen so that signs are kept,
/// divided by its (positive) content.
fn signed_pseudo_remainder(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading().expect("nonzero divisor").clone();
    let lc_abs = lc.abs();
    let lc_sign = if lc.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lead = r[top].clone();
        for c in r.iter_mut() {
            *c *= &lc_abs;
        }
        let factor = &lead * &lc_sign;
        for (j, c) in b.coeffs().iter().enumerate() {
            r[top - db + j] -= &factor * c;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    let r = IntPolynomial::new(r);
    let content = r.content();
    if content.is_zero() {
        r
    } else {
        r.div_exact_scalar(&content).expect("content divides")
    }
}

/// Primitive gcd with positive leading coefficient, by the primitive
/// pseudo-remainder sequence.
pub(crate) fn int_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = signed_pseudo_remainder(&a, &b);
        a = b;
        b = r;
    }
    a.primitive_part()
}

/// Exact quotient `a / b` of integer polynomials known to divide, made primitive.
fn exact_quotient(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (q, r) = a.to_rational().div_rem(&b.to_rational());
    debug_assert!(r.is_zero());
    q.to_primitive_int()
}

/// Square-free part `p / gcd(p, p')` as a primitive integer polynomial with
/// positive leading coefficient.
pub fn squarefree_int(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = derivative_gcd(p);
    if g.degree() == Some(0) {
        return Ok(p.primitive_part());
    }
    Ok(exact_quotient(p, &g))
}

/// `gcd(p, p')` as a primitive integer polynomial.
pub(crate) fn derivative_gcd(p: &IntPolynomial) -> IntPolynomial {
    let d = p.derivative();
    if d.is_zero() {
        return p.primitive_part();
    }
    int_gcd(p, &d)
}

/// Sturm sequence `f, f', -rem, ...` of a square-free polynomial, each entry primitive.
pub fn sturm_chain(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![f.clone()];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part_keep_sign());
    loop {
        let n = chain.len();
        let r = signed_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

trait KeepSign {
    fn primitive_part_keep_sign(&self) -> Self;
}

impl KeepSign for IntPolynomial {
    fn primitive_part_keep_sign(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            self.clone()
        } else {
            self.div_exact_scalar(&c).expect("content divides")
        }
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[IntPolynomial], x: &Dyadic) -> usize {
    variations(chain.iter().map(|p| sign_at(p, x)))
}

fn variations_at_minus_infinity(chain: &[IntPolynomial]) -> usize {
    variations(chain.iter().map(|p| {
        let lead = p.leading().map_or(0, |l| if l.is_negative() { -1 } else { 1 });
        let deg = p.degree().unwrap_or(0);
        if deg % 2 == 1 {
            -lead
        } else {
            lead
        }
    }))
}

/// Number of distinct roots in `(lo, hi]` of the square-free polynomial owning `chain`.
pub fn count_in(chain: &[IntPolynomial], lo: &Dyadic, hi: &Dyadic) -> usize {
    variations_at(chain, lo).saturating_sub(variations_at(chain, hi))
}

/// Distinct negative roots of the square-free polynomial owning `chain`.
pub fn count_negative(chain: &[IntPolynomial]) -> usize {
    let zero = Dyadic::integer(BigInt::zero());
    let at_zero = variations_at(chain, &zero);
    // roots in (-inf, 0); a root at 0 would be counted in (.., 0] so step back
    let at_zero = if sign_at(&chain[0], &zero) == 0 {
        at_zero + 1
    } else {
        at_zero
    };
    variations_at_minus_infinity(chain).saturating_sub(at_zero)
}

/// Power of two strictly above every root modulus (Cauchy bound).
pub fn cauchy_bound(p: &IntPolynomial) -> Dyadic {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = BigInt::one() + (max + &lead - BigInt::one()) / lead;
    let mut pow = BigInt::one();
    while pow <= bound {
        pow <<= 1;
    }
    Dyadic::integer(pow)
}

/// A dyadic point strictly inside `(lo, hi)` where `f` does not vanish.
fn split_point(f: &IntPolynomial, lo: &Dyadic, hi: &Dyadic) -> Dyadic {
    for bits in 1..64u32 {
        let denom = 1u64 << bits;
        // try points closest to the middle first
        let mid = denom / 2;
        for offset in 0..mid {
            for k in [mid - offset, mid + offset] {
                if k == 0 || k >= denom {
                    continue;
                }
                let x = Dyadic::between(lo, hi, k, bits);
                if sign_at(f, &x) != 0 {
                    return x;
                }
            }
            if offset > 8 {
                break;
            }
        }
    }
    unreachable!("a polynomial has finitely many roots")
}

/// Isolating intervals for the negative roots of a square-free `f` with
/// `f(0) != 0`, sorted left to right.
pub fn isolate_negative(f: &IntPolynomial, chain: &[IntPolynomial]) -> Result<Vec<RootInterval>> {
    let bound = cauchy_bound(f);
    let lo = Dyadic {
        num: -bound.num,
        exp: 0,
    };
    let hi = Dyadic::integer(BigInt::zero());
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, 0usize)];
    while let Some((lo, hi, depth)) = stack.pop() {
        match count_in(chain, &lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                if depth >= REFINEMENT_CAP {
                    return Err(Error::RefinementCap(REFINEMENT_CAP));
                }
                let mid = split_point(f, &lo, &hi);
                stack.push((lo, mid.clone(), depth + 1));
                stack.push((mid, hi, depth + 1));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Bisects `iv`, whose endpoints are not roots of `f`, until its width is at most `2^-bits`.
pub fn refine(f: &IntPolynomial, iv: &RootInterval, bits: u32) -> Result<RootInterval> {
    let mut iv = iv.clone();
    let target = Dyadic {
        num: BigInt::one(),
        exp: bits,
    };
    let hi_sign = sign_at(f, &iv.hi);
    for _ in 0..REFINEMENT_CAP {
        let exp = iv.hi.exp.max(iv.lo.exp);
        let width = Dyadic {
            num: iv.hi.at_exp(exp) - iv.lo.at_exp(exp),
            exp,
        };
        if width <= target {
            return Ok(iv);
        }
        let mid = split_point(f, &iv.lo, &iv.hi);
        let s = sign_at(f, &mid);
        if s == hi_sign {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    Err(Error::RefinementCap(REFINEMENT_CAP))
}

/// One bisection step of an isolating interval whose endpoints are not roots of `f`.
pub fn bisect_once(f: &IntPolynomial, iv: &RootInterval) -> RootInterval {
    let mid = split_point(f, &iv.lo, &iv.hi);
    if sign_at(f, &mid) == sign_at(f, &iv.hi) {
        RootInterval {
            lo: iv.lo.clone(),
            hi: mid,
        }
    } else {
        RootInterval {
            lo: mid,
            hi: iv.hi.clone(),
        }
    }
}

fn overlaps(a: &RootInterval, b: &RootInterval) -> bool {
    a.lo < b.hi && b.lo < a.hi
}

/// Isolating intervals of several square-free, pairwise coprime polynomials,
/// refined until no two intervals overlap. Returns `(polynomial index, interval)`
/// sorted left to right.
pub fn separate_roots(polys: &[IntPolynomial]) -> Result<Vec<(usize, RootInterval)>> {
    let mut all: Vec<(usize, RootInterval, usize)> = Vec::new();
    for (k, f) in polys.iter().enumerate() {
        let chain = sturm_chain(f);
        all.extend(isolate_negative(f, &chain)?.into_iter().map(|iv| (k, iv, 0)));
    }
    loop {
        all.sort_by(|a, b| a.1.lo.cmp(&b.1.lo));
        let clash = (1..all.len()).find(|&j| overlaps(&all[j - 1].1, &all[j].1));
        let Some(j) = clash else { break };
        for idx in [j - 1, j] {
            let (k, iv, depth) = &all[idx];
            if *depth >= REFINEMENT_CAP {
                return Err(Error::RefinementCap(REFINEMENT_CAP));
            }
            all[idx] = (*k, bisect_once(&polys[*k], iv), depth + 1);
        }
    }
    Ok(all.into_iter().map(|(k, iv, _)| (k, iv)).collect())
}
