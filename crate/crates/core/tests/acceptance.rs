//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! lines are printed even when everything passes.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use zpoly::corpus::{equivariant_corpus, small_corpus};
use zpoly::equivariant::{equivariant_c_character, equivariant_c_uniform, Basis, Partition, SymFunction};
use zpoly::families::{
    family_matroid_spec, kl_family, q_shift_check, series_identity_check, z_family, FamilySolver,
};
use zpoly::klz::{
    enumerate_index_tuples, kl_closed, kl_coeff_closed, kl_defining, kl_new_recursion, kl_via_mobius,
    z_polynomial,
};
use zpoly::matroid::{enumerate_flats, MatroidSpec};
use zpoly::roots::conjecture_sweep;
use zpoly::{IntPolynomial, NiceFamily, WhitneyTables};

/// Largest rank for the palindromicity check on family outputs.
const PALINDROME_FAMILY_DMAX: usize = 40;
const NARAYANA_DMAX: usize = 12;
const GAUSSIAN_DMAX: usize = 10;
const GAUSSIAN_Q: [u64; 4] = [2, 3, 4, 5];
const TERM_COUNT_IMAX: usize = 8;
const SWEEP_DMAX: usize = 20;
const STRETCH_DMAX: usize = 30;
const SWEEP_BUDGET: Duration = Duration::from_secs(15 * 60);
const BRAID_FAST_D: usize = 40;
const BRAID_FAST_BUDGET: Duration = Duration::from_secs(10);
const SPEEDUP_D: usize = 8;
const SPEEDUP_TARGET: f64 = 100.0;
const PI9_FLATS: usize = 21147;
const SERIES_ORDERS: [(NiceFamily, usize); 2] = [(NiceFamily::Braid, 12), (NiceFamily::TypeB, 10)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn palindromicity() -> Outcome {
    let corpus = small_corpus();
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|e| {
            let lat = e.lattice().unwrap();
            (!z_polynomial(&lat).is_palindromic(lat.rk())).then(|| e.name.clone())
        })
        .collect();
    let mut bad_family = Vec::new();
    for family in [
        NiceFamily::Braid,
        NiceFamily::TypeB,
        NiceFamily::Uniform(1),
        NiceFamily::QVec(2),
    ] {
        for d in 0..=PALINDROME_FAMILY_DMAX {
            if !z_family(family, d).unwrap().is_palindromic(d) {
                bad_family.push(format!("{family} d={d}"));
            }
        }
    }
    ensure(
        bad.is_empty() && bad_family.is_empty(),
        format!(
            "{} corpus lattices and 4 families to d={PALINDROME_FAMILY_DMAX}; failures {bad:?} {bad_family:?}",
            corpus.len()
        ),
    )
}

fn four_methods() -> Outcome {
    let corpus = small_corpus();
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|e| {
            let lat = e.lattice().unwrap();
            let p = kl_defining(&lat);
            let agree = p == kl_via_mobius(&lat) && p == kl_new_recursion(&lat) && p == kl_closed(&lat);
            (!agree).then(|| e.name.clone())
        })
        .collect();
    ensure(
        bad.is_empty(),
        format!("{} corpus lattices; disagreements {bad:?}", corpus.len()),
    )
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn narayana_identity() -> Outcome {
    let mut checked = 0;
    for d in 0..=NARAYANA_DMAX {
        let z = z_family(NiceFamily::Uniform(1), d).unwrap();
        let n = d as u128 + 1;
        for i in 0..=d {
            let k = i as u128 + 1;
            let expected = binomial(n, k) * binomial(n, k - 1) / n;
            if z.coeff(i) != BigInt::from(expected) {
                return Err(format!("d={d} i={i}: {} vs N({n},{k}) = {expected}", z.coeff(i)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} coefficients for d <= {NARAYANA_DMAX}"))
}

/// Gaussian binomials by the q-Pascal rule.
fn gaussian_rows(q: u64, n_max: usize) -> Vec<Vec<BigInt>> {
    let q = BigInt::from(q);
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    BigInt::from(0)
                };
                let right = prev.get(k).map_or(BigInt::from(0), |x| x * q.pow(k as u32));
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

fn gaussian_and_shift() -> Outcome {
    for q in GAUSSIAN_Q {
        let rows = gaussian_rows(q, GAUSSIAN_DMAX);
        let z: Vec<IntPolynomial> = (0..=GAUSSIAN_DMAX)
            .map(|d| z_family(NiceFamily::QVec(q), d).unwrap())
            .collect();
        for d in 0..=GAUSSIAN_DMAX {
            if z[d] != IntPolynomial::new(rows[d].clone()) {
                return Err(format!("q={q} d={d}: Z = {}", z[d]));
            }
            if d > 0 {
                let prev = z[d - 1].coeffs();
                let shifted: Vec<BigInt> = (0..=d)
                    .map(|k| {
                        let scaled = prev
                            .get(k)
                            .map_or(BigInt::from(0), |c| c * BigInt::from(q).pow(k as u32));
                        let lifted = if k > 0 {
                            prev.get(k - 1).cloned().unwrap_or_default()
                        } else {
                            BigInt::from(0)
                        };
                        scaled + lifted
                    })
                    .collect();
                if z[d] != IntPolynomial::new(shifted) {
                    return Err(format!("shift identity fails at q={q} d={d}"));
                }
            }
        }
        if !q_shift_check(q, GAUSSIAN_DMAX).unwrap() {
            return Err(format!("q_shift_check reports failure for q={q}"));
        }
    }
    Ok(format!("q in {GAUSSIAN_Q:?}, d <= {GAUSSIAN_DMAX}"))
}

fn term_count() -> Outcome {
    for i in 1..=TERM_COUNT_IMAX {
        let n = enumerate_index_tuples(i, 2 * i + 1).len();
        let expected = 2 * 3usize.pow(i as u32 - 1);
        if n != expected {
            return Err(format!("i={i}: {n} tuples, expected {expected}"));
        }
    }
    Ok(format!("2*3^(i-1) tuples for 1 <= i <= {TERM_COUNT_IMAX}"))
}

fn sweep_families() -> Vec<NiceFamily> {
    let mut families = vec![NiceFamily::Braid, NiceFamily::TypeB];
    families.extend((1..=5).map(NiceFamily::Uniform));
    families
}

fn sweep_to(d_max: usize) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for family in sweep_families() {
        let report = conjecture_sweep(family, d_max, false).unwrap();
        failures.extend(report.failures().iter().map(|r| format!("{family} d={}", r.d)));
    }
    let elapsed = start.elapsed();
    ensure(
        failures.is_empty() && elapsed < SWEEP_BUDGET,
        format!(
            "7 families, d <= {d_max}, {:.1}s; failures {failures:?}",
            elapsed.as_secs_f64()
        ),
    )
}

fn conjecture_sweep_to_20() -> Outcome {
    sweep_to(SWEEP_DMAX)
}

fn performance() -> Outcome {
    let start = Instant::now();
    kl_family(NiceFamily::Braid, BRAID_FAST_D).unwrap();
    let d40 = start.elapsed();

    let lat = enumerate_flats(&MatroidSpec::complete_graph(SPEEDUP_D + 1)).unwrap();
    let start = Instant::now();
    let slow = kl_defining(&lat);
    let slow_time = start.elapsed();
    let start = Instant::now();
    let fast = kl_family(NiceFamily::Braid, SPEEDUP_D).unwrap();
    let fast_time = start.elapsed();
    let ratio = slow_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9);
    ensure(
        d40 < BRAID_FAST_BUDGET && lat.len() == PI9_FLATS && slow == fast && ratio >= SPEEDUP_TARGET,
        format!(
            "braid d={BRAID_FAST_D} in {:.1} ms; d={SPEEDUP_D}: {} flats, generic {:.1} ms vs family {:.3} ms ({ratio:.0}x), outputs {}",
            d40.as_secs_f64() * 1e3,
            lat.len(),
            slow_time.as_secs_f64() * 1e3,
            fast_time.as_secs_f64() * 1e3,
            if slow == fast { "identical" } else { "DIFFER" }
        ),
    )
}

fn family_generic() -> Outcome {
    let mut cases = vec![
        (NiceFamily::Braid, 6),
        (NiceFamily::TypeB, 4),
        (NiceFamily::QVec(2), 3),
    ];
    cases.extend((1..=3).map(|m| (NiceFamily::Uniform(m), 9 - m as usize)));
    let mut checked = 0;
    for (family, d_max) in cases {
        let solver = FamilySolver::new(WhitneyTables::build(family, d_max).unwrap());
        for d in 0..=d_max {
            let lat = enumerate_flats(&family_matroid_spec(family, d).unwrap()).unwrap();
            if solver.kl(d).unwrap() != &kl_defining(&lat) || solver.z(d).unwrap() != &z_polynomial(&lat) {
                return Err(format!("{family} d={d}"));
            }
            let counts = lat.rank_counts();
            let chi = lat.characteristic_polynomial();
            for k in 0..=d {
                let w = solver.tables().whitney(d, k as i64).unwrap();
                if w != BigInt::from(counts[d - k])
                    || solver.tables().char_coeff(d, k as i64).unwrap() != chi.coeff(k)
                {
                    return Err(format!("{family} d={d}: table row {k} differs from the lattice"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} family members match their lattices (P, Z, Whitney and characteristic rows)"
    ))
}

fn equivariant() -> Outcome {
    let mut cases = 0;
    for m in 0..=3 {
        for d in 1..=8 {
            let lat = enumerate_flats(&MatroidSpec::Uniform { m, d }).unwrap();
            let p = kl_defining(&lat);
            for i in 1..d.div_ceil(2) {
                let c = equivariant_c_uniform(m, d, i as i64).unwrap();
                if c.dimension(m + d).unwrap() != p.coeff(i) {
                    return Err(format!("dimension mismatch U({m},{d}) i={i}"));
                }
                if !c.is_schur_positive().unwrap() {
                    return Err(format!(
                        "not Schur positive: U({m},{d}) i={i}: {}",
                        c.to_schur().unwrap()
                    ));
                }
                cases += 1;
            }
        }
    }
    let s22 = SymFunction::term(Basis::Schur, Partition::new(vec![2, 2]), BigInt::from(1));
    if equivariant_c_uniform(1, 3, 1).unwrap().to_schur().unwrap() != s22 {
        return Err("c(1) of U(1,3) is not s[2,2]".to_string());
    }
    let pairs = equivariant_corpus().unwrap();
    let max_order = pairs.iter().map(|(_, g)| g.order()).max().unwrap_or(0);
    for (entry, group) in &pairs {
        let lat = entry.lattice().unwrap();
        for i in 1..=(lat.rk() as i64 - 1) / 2 {
            let chi = equivariant_c_character(&lat, group, i).unwrap();
            if *chi.at_identity() != kl_coeff_closed(&lat, i).unwrap() {
                return Err(format!("{} i={i}: character at identity differs", entry.name));
            }
        }
    }
    Ok(format!(
        "{cases} uniform coefficients (dimension, Schur positivity), c(1) of U(1,3) = s[2,2], {} (lattice, group) pairs with |G| <= {max_order}",
        pairs.len()
    ))
}

fn series() -> Outcome {
    for (family, order) in SERIES_ORDERS {
        if !series_identity_check(family, order).unwrap() {
            return Err(format!("{family} at order {order}"));
        }
    }
    Ok("braid to order 12, type B to order 10".to_string())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("palindromicity of Z", palindromicity),
        ("four-method agreement", four_methods),
        ("Narayana identity", narayana_identity),
        ("Gaussian and q-shift identities", gaussian_and_shift),
        ("closed-formula term count", term_count),
        ("conjecture sweep to d=20", conjecture_sweep_to_20),
        ("family recursion performance", performance),
        ("family/generic consistency", family_generic),
        ("equivariant suite", equivariant),
        ("truncated series identities", series),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name} ({secs:.1}s): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}. {name} ({secs:.1}s): {detail}", k + 1);
            }
        }
    }
    // reported only
    let start = Instant::now();
    let stretch =
        panic::catch_unwind(|| sweep_to(STRETCH_DMAX)).unwrap_or_else(|_| Err("panicked".to_string()));
    let secs = start.elapsed().as_secs_f64();
    match stretch {
        Ok(detail) => {
            println!("PASS  *. stretch sweep to d={STRETCH_DMAX} ({secs:.1}s, not gating): {detail}")
        }
        Err(detail) => {
            println!("FAIL  *. stretch sweep to d={STRETCH_DMAX} ({secs:.1}s, not gating): {detail}")
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
