use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{interlaces, is_negative_real_rooted, negative_root_profile, sturm_certificate};
use super::{InterlaceVerdict, RootInterval};
use crate::families::{FamilySolver, NiceFamily, WhitneyTables};
use crate::{IntPolynomial, Result};

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub family: NiceFamily,
    pub d: usize,
    pub negative_real_rooted: bool,
    /// Verdict for `(Z_d, Z_{d-1})`; absent at `d = 0` or when either is not real-rooted.
    pub interlace: Option<InterlaceVerdict>,
    pub max_coeff_digits: usize,
    pub millis: u64,
    /// Isolating intervals of the distinct roots of `Z_d`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<RootInterval>>,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.negative_real_rooted
            && (self.d == 0
                || matches!(
                    self.interlace,
                    Some(InterlaceVerdict::StrictInterlace | InterlaceVerdict::WeakInterlace)
                ))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub family: NiceFamily,
    pub d_max: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(SweepRow::passed)
    }

    pub fn failures(&self) -> Vec<&SweepRow> {
        self.rows.iter().filter(|r| !r.passed()).collect()
    }
}

fn sweep_row(family: NiceFamily, d: usize, z: &[IntPolynomial], certificates: bool) -> Result<SweepRow> {
    let start = Instant::now();
    let current = &z[d];
    let negative_real_rooted = is_negative_real_rooted(current)?;
    let interlace = if d == 0 || !negative_real_rooted || !is_negative_real_rooted(&z[d - 1])? {
        None
    } else {
        Some(interlaces(current, &z[d - 1])?)
    };
    let certificate = if certificates && negative_real_rooted {
        Some(sturm_certificate(current)?.isolating)
    } else {
        None
    };
    Ok(SweepRow {
        family,
        d,
        negative_real_rooted,
        interlace,
        max_coeff_digits: current.max_coeff_digits(),
        millis: start.elapsed().as_millis() as u64,
        certificate,
    })
}

/// Negative-real-rootedness of `Z_d` and interlacing of `(Z_d, Z_{d-1})` for `d <= d_max`.
pub fn conjecture_sweep(family: NiceFamily, d_max: usize, certificates: bool) -> Result<SweepReport> {
    let solver = FamilySolver::new(WhitneyTables::build(family, d_max)?);
    let z: Vec<IntPolynomial> = (0..=d_max).map(|d| solver.z(d).cloned()).collect::<Result<_>>()?;
    let rows = (0..=d_max)
        .into_par_iter()
        .map(|d| sweep_row(family, d, &z, certificates))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { family, d_max, rows })
}

/// For the `F_q` family at rank `d >= 1`: the roots `a_1 < ... < a_d` of `Z_d` are
/// simple and negative, `a_i < q a_{i+1}`, and each gap `(a_i, a_{i+1})` holds
/// exactly one root of `Z_{d-1}`, which has no root in common with `Z_d`.
pub fn qvec_root_separation(q: u64, d: usize) -> Result<bool> {
    if d == 0 {
        return Ok(true);
    }
    let solver = FamilySolver::new(WhitneyTables::build(NiceFamily::QVec(q), d)?);
    let (zd, zprev) = (solver.z(d)?, solver.z(d - 1)?);
    if !is_negative_real_rooted(zd)? {
        return Ok(false);
    }
    // q^d Z_d(t / q) has roots q a_i
    let q_big = BigInt::from(q);
    let scaled = IntPolynomial::new(
        zd.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * q_big.pow((d - k) as u32))
            .collect(),
    );
    let positions = |profile: &[Vec<usize>], which: usize| -> Vec<usize> {
        profile
            .iter()
            .enumerate()
            .flat_map(|(pos, m)| std::iter::repeat_n(pos, m[which]))
            .collect()
    };
    let with_scaled = negative_root_profile(&[zd, &scaled])?;
    if with_scaled.iter().any(|m| m[0] > 1) {
        return Ok(false);
    }
    let (a, qa) = (positions(&with_scaled, 0), positions(&with_scaled, 1));
    let separated = (0..d - 1).all(|i| a[i] < qa[i + 1]);
    let with_prev = negative_root_profile(&[zd, zprev])?;
    let shared = with_prev.iter().any(|m| m[0] > 0 && m[1] > 0);
    let (a, b) = (positions(&with_prev, 0), positions(&with_prev, 1));
    let one_per_gap = (0..d - 1).all(|i| b.iter().filter(|&&p| a[i] < p && p < a[i + 1]).count() == 1);
    Ok(separated && !shared && one_per_gap && b.len() == d - 1)
}
