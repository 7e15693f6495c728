//! Exact real-root questions about integer polynomials: negative-real-rootedness,
//! isolation, interlacing and log-concavity.
//!
//! Everything is decided with Sturm sequences evaluated at dyadic rationals, so
//! answers are exact regardless of coefficient size.

mod sturm;
mod sweep;

use num_traits::Zero;
use serde::Serialize;

use crate::{Error, IntPolynomial, RatPolynomial, Result};

pub use sturm::{cauchy_bound, refine, sturm_chain, Dyadic, RootInterval, REFINEMENT_CAP};
pub use sweep::{conjecture_sweep, qvec_root_separation, SweepReport, SweepRow};

use sturm::{
    count_in, count_negative, derivative_gcd, int_gcd, isolate_negative, separate_roots, sign_at,
    squarefree_int,
};

fn require_nonzero_at_origin(p: &IntPolynomial) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::ZeroAtOrigin);
    }
    Ok(())
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn squarefree_part(p: &IntPolynomial) -> Result<RatPolynomial> {
    Ok(squarefree_int(p)?.to_rational())
}

/// Square-free parts of `p, gcd(p, p'), gcd of that with its derivative, ...`;
/// a root of multiplicity `m` is a root of exactly the first `m` of them.
fn multiplicity_layers(p: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let mut layers = Vec::new();
    let mut current = p.clone();
    while current.degree().is_some_and(|d| d > 0) {
        layers.push(squarefree_int(&current)?);
        current = derivative_gcd(&current);
    }
    Ok(layers)
}

/// `(distinct, with multiplicity)` counts of negative real roots.
pub fn count_negative_real_roots(p: &IntPolynomial) -> Result<(usize, usize)> {
    require_nonzero_at_origin(p)?;
    let layers = multiplicity_layers(p)?;
    let counts: Vec<usize> = layers.iter().map(|l| count_negative(&sturm_chain(l))).collect();
    Ok((counts.first().copied().unwrap_or(0), counts.iter().sum()))
}

pub fn is_negative_real_rooted(p: &IntPolynomial) -> Result<bool> {
    let (_, total) = count_negative_real_roots(p)?;
    Ok(Some(total) == p.degree())
}

/// Isolating intervals for the distinct roots of `p`, all of which must be negative reals.
pub fn isolate_roots(p: &IntPolynomial) -> Result<Vec<RootInterval>> {
    Ok(sturm_certificate(p)?.isolating)
}

/// Square-free part, its Sturm chain and the isolating intervals of its roots.
#[derive(Clone, Debug, Serialize)]
pub struct SturmCertificate {
    pub squarefree: IntPolynomial,
    pub chain: Vec<IntPolynomial>,
    pub isolating: Vec<RootInterval>,
}

pub fn sturm_certificate(p: &IntPolynomial) -> Result<SturmCertificate> {
    require_nonzero_at_origin(p)?;
    let squarefree = squarefree_int(p)?;
    let chain = sturm_chain(&squarefree);
    let degree = squarefree.degree().unwrap_or(0);
    let real = count_negative(&chain);
    if real != degree {
        return Err(Error::NonRealRoots { real, degree });
    }
    let isolating = isolate_negative(&squarefree, &chain)?;
    Ok(SturmCertificate {
        squarefree,
        chain,
        isolating,
    })
}

impl SturmCertificate {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self) -> bool {
        let f = &self.squarefree;
        if sturm_chain(f) != self.chain {
            return false;
        }
        let chain_ok = self.isolating.iter().all(|iv| {
            iv.lo < iv.hi
                && count_in(&self.chain, &iv.lo, &iv.hi) == 1
                && sign_at(f, &iv.lo) * sign_at(f, &iv.hi) == -1
        });
        let sorted = self.isolating.windows(2).all(|w| w[0].hi <= w[1].lo);
        let inside = self.isolating.iter().all(|iv| iv.hi <= Dyadic::integer(0.into()));
        chain_ok && sorted && inside && Some(self.isolating.len()) == f.degree().or(Some(0))
    }
}

/// Distinct negative roots of all `polys` together, in increasing order, with
/// the multiplicity of each root in each polynomial.
pub fn negative_root_profile(polys: &[&IntPolynomial]) -> Result<Vec<Vec<usize>>> {
    for p in polys {
        require_nonzero_at_origin(p)?;
    }
    if let Some(profile) = coprime_profile(polys)? {
        return Ok(profile);
    }
    let product = polys.iter().fold(IntPolynomial::one(), |acc, p| &acc * *p);
    if product.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let all = squarefree_int(&product)?;
    let chain = sturm_chain(&all);
    let intervals = isolate_negative(&all, &chain)?;
    let layers: Vec<Vec<IntPolynomial>> = polys
        .iter()
        .map(|p| multiplicity_layers(p))
        .collect::<Result<_>>()?;
    Ok(intervals
        .iter()
        .map(|iv| {
            layers
                .iter()
                .map(|ls| {
                    ls.iter()
                        .filter(|l| sign_at(l, &iv.lo) * sign_at(l, &iv.hi) < 0)
                        .count()
                })
                .collect()
        })
        .collect())
}

/// Cheaper route when every polynomial is square-free and they are pairwise
/// coprime: isolate each one separately and refine until the intervals separate.
fn coprime_profile(polys: &[&IntPolynomial]) -> Result<Option<Vec<Vec<usize>>>> {
    for (k, p) in polys.iter().enumerate() {
        if derivative_gcd(p).degree() != Some(0) {
            return Ok(None);
        }
        if polys[..k].iter().any(|q| int_gcd(p, q).degree() != Some(0)) {
            return Ok(None);
        }
    }
    let owned: Vec<IntPolynomial> = polys.iter().map(|p| p.primitive_part()).collect();
    Ok(Some(
        separate_roots(&owned)?
            .into_iter()
            .map(|(k, _)| {
                let mut mult = vec![0; polys.len()];
                mult[k] = 1;
                mult
            })
            .collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum InterlaceVerdict {
    StrictInterlace,
    WeakInterlace,
    /// `witness` is the first `i` (1-based) with `a_i <= b_i <= a_{i+1}` violated.
    NoInterlace {
        witness: usize,
    },
}

/// Whether `f` (degree `d`) interlaces `g` (degree `d - 1`), both negative-real-rooted:
/// with roots `a_1 <= ... <= a_d` and `b_1 <= ... <= b_{d-1}`, `a_i <= b_i <= a_{i+1}`.
pub fn interlaces(f: &IntPolynomial, g: &IntPolynomial) -> Result<InterlaceVerdict> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if f.is_zero() || g.is_zero() || df != dg + 1 {
        return Err(Error::DegreeMismatch { f: df, g: dg });
    }
    for p in [f, g] {
        let (_, total) = count_negative_real_roots(p)?;
        let degree = p.degree().unwrap_or(0);
        if total != degree {
            return Err(Error::NonRealRoots { real: total, degree });
        }
    }
    let profile = negative_root_profile(&[f, g])?;
    // positions of roots (with multiplicity) in the merged order
    let expand = |which: usize| -> Vec<usize> {
        profile
            .iter()
            .enumerate()
            .flat_map(|(pos, mult)| std::iter::repeat_n(pos, mult[which]))
            .collect()
    };
    let (a, b) = (expand(0), expand(1));
    let mut strict = true;
    for i in 0..dg {
        if !(a[i] <= b[i] && b[i] <= a[i + 1]) {
            return Ok(InterlaceVerdict::NoInterlace { witness: i + 1 });
        }
        strict &= a[i] < b[i] && b[i] < a[i + 1];
    }
    Ok(if strict {
        InterlaceVerdict::StrictInterlace
    } else {
        InterlaceVerdict::WeakInterlace
    })
}

/// Nonnegative coefficients with `c_i^2 >= c_{i-1} c_{i+1}` for every interior `i`.
pub fn is_log_concave(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    c.iter().all(|x| x.sign() != num_bigint::Sign::Minus)
        && c.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

#[cfg(test)]
mod tests;
