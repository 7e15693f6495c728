use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use zpoly::corpus::{equivariant_corpus, small_corpus};
use zpoly::equivariant::{equivariant_c_character, equivariant_c_uniform, Basis, Partition, SymFunction};
use zpoly::families::{
    build_tables, family_matroid_spec, gaussian_binomial, narayana, q_shift_check, series_identity_report,
    FamilySolver,
};
use zpoly::klz::{kl_coeff_closed, kl_polynomial, z_polynomial, KlMethod};
use zpoly::matroid::enumerate_flats;
use zpoly::roots::{conjecture_sweep, is_log_concave, InterlaceVerdict, SweepReport};
use zpoly::NiceFamily;

use crate::config::{Job, JobConfig};
use crate::output::{csv_field, Outcome, Rendered, Status};
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Palindrome,
    Crossmethod,
    Narayana,
    Gaussian,
    Qshift,
    Roots,
    Interlace,
    Logconcave,
    Schur,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Palindrome,
        Suite::Crossmethod,
        Suite::Narayana,
        Suite::Gaussian,
        Suite::Qshift,
        Suite::Roots,
        Suite::Interlace,
        Suite::Logconcave,
        Suite::Schur,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Palindrome => "palindrome",
            Suite::Crossmethod => "crossmethod",
            Suite::Narayana => "narayana",
            Suite::Gaussian => "gaussian",
            Suite::Qshift => "qshift",
            Suite::Roots => "roots",
            Suite::Interlace => "interlace",
            Suite::Logconcave => "logconcave",
            Suite::Schur => "schur",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                CliError::Usage(format!(
                    "unknown suite {s:?}; available suites: {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// Passes when `failures` is empty; otherwise lists them.
    fn from_failures(name: impl Into<String>, checked: usize, failures: Vec<String>) -> Self {
        let detail = if failures.is_empty() {
            format!("{checked} cases")
        } else {
            format!(
                "{} of {checked} cases failed: {}",
                failures.len(),
                failures.join("; ")
            )
        };
        Self::new(name, failures.is_empty(), detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Params<'a> {
    families: &'a [NiceFamily],
    dmax: Option<usize>,
    corpus: bool,
    q: &'a [u64],
    order: Option<usize>,
}

impl Params<'_> {
    fn families_or(&self, default: &[NiceFamily]) -> Vec<NiceFamily> {
        if self.families.is_empty() {
            default.to_vec()
        } else {
            self.families.to_vec()
        }
    }

    fn q_or_default(&self) -> Vec<u64> {
        if self.q.is_empty() {
            vec![2, 3, 4, 5]
        } else {
            self.q.to_vec()
        }
    }
}

const ROOT_FAMILIES: [NiceFamily; 7] = [
    NiceFamily::Braid,
    NiceFamily::TypeB,
    NiceFamily::Uniform(1),
    NiceFamily::Uniform(2),
    NiceFamily::Uniform(3),
    NiceFamily::Uniform(4),
    NiceFamily::Uniform(5),
];

pub fn cmd_verify(config: &JobConfig) -> CliResult<Outcome> {
    let Job::Verify {
        suite,
        families,
        dmax,
        corpus,
        q,
        order,
    } = &config.job
    else {
        return Err(CliError::Usage("not a verify job".to_string()));
    };
    let params = Params {
        families,
        dmax: *dmax,
        corpus: *corpus,
        q,
        order: *order,
    };
    let checks = run_suite(*suite, &params)?;
    let report = VerifyReport {
        suite: *suite,
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    let status = Status::from_passed(report.passed);
    Ok(render_verify(&report).into_outcome(config.format, status))
}

fn run_suite(suite: Suite, p: &Params) -> CliResult<Vec<Check>> {
    match suite {
        Suite::Palindrome => palindrome(p),
        Suite::Crossmethod => crossmethod(p),
        Suite::Narayana => Ok(vec![narayana_check(p.dmax.unwrap_or(12))?]),
        Suite::Gaussian => p
            .q_or_default()
            .into_iter()
            .map(|q| gaussian_check(q, p.dmax.unwrap_or(10)))
            .collect(),
        Suite::Qshift => p
            .q_or_default()
            .into_iter()
            .map(|q| {
                let d = p.dmax.unwrap_or(10);
                Ok(Check::new(
                    format!("qvec:{q} shift d<={d}"),
                    q_shift_check(q, d)?,
                    "Z_d(t) = Z_{d-1}(qt) + t Z_{d-1}(t)",
                ))
            })
            .collect(),
        Suite::Roots | Suite::Interlace => roots(suite, p),
        Suite::Logconcave => logconcave(p),
        Suite::Schur => schur(p),
        Suite::Series => series(p),
    }
}

fn palindrome(p: &Params) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    if p.corpus {
        let corpus = small_corpus();
        let failures = corpus
            .par_iter()
            .map(|entry| {
                let lat = entry.lattice()?;
                let z = z_polynomial(&lat);
                Ok((!z.is_palindromic(lat.rk())).then(|| format!("{}: {z}", entry.name)))
            })
            .collect::<zpoly::Result<Vec<_>>>()?;
        checks.push(Check::from_failures(
            "corpus Z palindromic",
            corpus.len(),
            failures.into_iter().flatten().collect(),
        ));
    }
    let d_max = p.dmax.unwrap_or(40);
    let defaults = [
        NiceFamily::Braid,
        NiceFamily::TypeB,
        NiceFamily::Uniform(1),
        NiceFamily::QVec(2),
    ];
    for family in p.families_or(&defaults) {
        let solver = FamilySolver::new(build_tables(family, d_max)?);
        let mut failures = Vec::new();
        for d in 0..=d_max {
            if !solver.z(d)?.is_palindromic(d) {
                failures.push(format!("d={d}"));
            }
        }
        checks.push(Check::from_failures(
            format!("{family} Z palindromic d<={d_max}"),
            d_max + 1,
            failures,
        ));
    }
    Ok(checks)
}

fn crossmethod(p: &Params) -> CliResult<Vec<Check>> {
    let mut checks = Vec::new();
    if p.corpus {
        let corpus = small_corpus();
        let failures = corpus
            .par_iter()
            .map(|entry| {
                let lat = entry.lattice()?;
                let polys: Vec<_> = KlMethod::ALL.iter().map(|&m| kl_polynomial(&lat, m)).collect();
                let agree = polys.windows(2).all(|w| w[0] == w[1]);
                Ok((!agree).then(|| {
                    let listed: Vec<String> = KlMethod::ALL
                        .iter()
                        .zip(&polys)
                        .map(|(m, p)| format!("{m}={p}"))
                        .collect();
                    format!("{}: {}", entry.name, listed.join(", "))
                }))
            })
            .collect::<zpoly::Result<Vec<_>>>()?;
        checks.push(Check::from_failures(
            "corpus four-method agreement",
            corpus.len(),
            failures.into_iter().flatten().collect(),
        ));
    }
    let defaults = [
        NiceFamily::Braid,
        NiceFamily::TypeB,
        NiceFamily::Uniform(1),
        NiceFamily::Uniform(2),
        NiceFamily::Uniform(3),
        NiceFamily::QVec(2),
    ];
    for family in p.families_or(&defaults) {
        let d_max = p.dmax.unwrap_or(match family {
            NiceFamily::Braid => 6,
            NiceFamily::TypeB => 4,
            NiceFamily::Uniform(m) => 9usize.saturating_sub(m as usize),
            NiceFamily::QVec(_) => 3,
        });
        let solver = FamilySolver::new(build_tables(family, d_max)?);
        let mut failures = Vec::new();
        for d in 0..=d_max {
            let lat = enumerate_flats(&family_matroid_spec(family, d)?)?;
            let (kl, z) = (kl_polynomial(&lat, KlMethod::Defining), z_polynomial(&lat));
            if solver.kl(d)? != &kl || solver.z(d)? != &z {
                failures.push(format!(
                    "d={d}: lattice P={kl} Z={z}, family P={} Z={}",
                    solver.kl(d)?,
                    solver.z(d)?
                ));
            }
        }
        checks.push(Check::from_failures(
            format!("{family} family vs lattice d<={d_max}"),
            d_max + 1,
            failures,
        ));
    }
    Ok(checks)
}

fn narayana_check(d_max: usize) -> CliResult<Check> {
    let solver = FamilySolver::new(build_tables(NiceFamily::Uniform(1), d_max)?);
    let mut failures = Vec::new();
    for d in 0..=d_max {
        let z = solver.z(d)?;
        for i in 0..=d {
            let expected = narayana(d as i64 + 1, i as i64 + 1);
            if z.coeff(i) != expected {
                failures.push(format!("d={d} i={i}: {} vs {expected}", z.coeff(i)));
            }
        }
    }
    Ok(Check::from_failures(
        format!("Z of U(1,d) is Narayana, d<={d_max}"),
        d_max + 1,
        failures,
    ))
}

fn gaussian_check(q: u64, d_max: usize) -> CliResult<Check> {
    let solver = FamilySolver::new(build_tables(NiceFamily::QVec(q), d_max)?);
    let mut failures = Vec::new();
    for d in 0..=d_max {
        let z = solver.z(d)?;
        for k in 0..=d {
            let expected = gaussian_binomial(d as i64, k as i64, q);
            if z.coeff(k) != expected {
                failures.push(format!("d={d} k={k}: {} vs {expected}", z.coeff(k)));
            }
        }
    }
    Ok(Check::from_failures(
        format!("qvec:{q} Z is Gaussian, d<={d_max}"),
        d_max + 1,
        failures,
    ))
}

fn sweep_failures(suite: Suite, report: &SweepReport) -> Vec<String> {
    report
        .rows
        .iter()
        .filter_map(|row| match suite {
            Suite::Roots if !row.negative_real_rooted => Some(format!("d={} not real-rooted", row.d)),
            Suite::Interlace if row.d > 0 => match &row.interlace {
                Some(InterlaceVerdict::StrictInterlace | InterlaceVerdict::WeakInterlace) => None,
                other => Some(format!("d={}: {other:?}", row.d)),
            },
            _ => None,
        })
        .collect()
}

fn roots(suite: Suite, p: &Params) -> CliResult<Vec<Check>> {
    let d_max = p.dmax.unwrap_or(20);
    let what = if suite == Suite::Roots {
        "real-rooted"
    } else {
        "interlacing"
    };
    p.families_or(&ROOT_FAMILIES)
        .into_iter()
        .map(|family| {
            let report = conjecture_sweep(family, d_max, false)?;
            Ok(Check::from_failures(
                format!("{family} Z {what} d<={d_max}"),
                d_max + 1,
                sweep_failures(suite, &report),
            ))
        })
        .collect()
}

fn logconcave(p: &Params) -> CliResult<Vec<Check>> {
    let d_max = p.dmax.unwrap_or(20);
    let mut defaults = ROOT_FAMILIES.to_vec();
    defaults.push(NiceFamily::QVec(2));
    p.families_or(&defaults)
        .into_iter()
        .map(|family| {
            let solver = FamilySolver::new(build_tables(family, d_max)?);
            let mut failures = Vec::new();
            for d in 0..=d_max {
                if !is_log_concave(solver.z(d)?) {
                    failures.push(format!("d={d}"));
                }
            }
            Ok(Check::from_failures(
                format!("{family} Z log-concave d<={d_max}"),
                d_max + 1,
                failures,
            ))
        })
        .collect()
}

fn schur(p: &Params) -> CliResult<Vec<Check>> {
    let d_max = p.dmax.unwrap_or(8);
    let mut checks = Vec::new();

    let c = equivariant_c_uniform(1, 3, 1)?.to_schur()?;
    let s22 = SymFunction::term(Basis::Schur, Partition::new(vec![2, 2]), BigInt::from(1));
    checks.push(Check::new("c(1) of U(1,3) is s[2,2]", c == s22, c.to_string()));

    let mut dim_failures = Vec::new();
    let mut pos_failures = Vec::new();
    let mut cases = 0;
    for m in 0..=3u32 {
        let solver = FamilySolver::new(build_tables(NiceFamily::Uniform(m.max(1)), d_max)?);
        for d in 1..=d_max {
            for i in 1..d.div_ceil(2) {
                cases += 1;
                let c = equivariant_c_uniform(m as usize, d, i as i64)?;
                let expected = if m == 0 {
                    BigInt::from(0)
                } else {
                    solver.kl(d)?.coeff(i)
                };
                if c.dimension(m as usize + d)? != expected {
                    dim_failures.push(format!("U({m},{d}) i={i}"));
                }
                if !c.is_schur_positive()? {
                    pos_failures.push(format!("U({m},{d}) i={i}: {}", c.to_schur()?));
                }
            }
        }
    }
    checks.push(Check::from_failures(
        format!("dimension of c(i) for U(m<=3,d<={d_max})"),
        cases,
        dim_failures,
    ));
    checks.push(Check::from_failures(
        format!("Schur positivity of c(i) for U(m<=3,d<={d_max})"),
        cases,
        pos_failures,
    ));

    if p.corpus {
        let pairs = equivariant_corpus()?;
        let failures = pairs
            .iter()
            .map(|(entry, group)| {
                let lat = entry.lattice()?;
                let mut bad = Vec::new();
                for i in 1..=(lat.rk() as i64 - 1) / 2 {
                    let chi = equivariant_c_character(&lat, group, i)?;
                    let expected = kl_coeff_closed(&lat, i)?;
                    if *chi.at_identity() != expected {
                        bad.push(format!(
                            "{} i={i}: {} vs {expected}",
                            entry.name,
                            chi.at_identity()
                        ));
                    }
                }
                Ok(bad)
            })
            .collect::<zpoly::Result<Vec<_>>>()?;
        checks.push(Check::from_failures(
            "character at identity equals c(i) on the symmetric corpus",
            pairs.len(),
            failures.into_iter().flatten().collect(),
        ));
    }
    Ok(checks)
}

fn series(p: &Params) -> CliResult<Vec<Check>> {
    p.families_or(&[NiceFamily::Braid, NiceFamily::TypeB])
        .into_iter()
        .map(|family| {
            let order = p
                .order
                .unwrap_or(if family == NiceFamily::TypeB { 10 } else { 12 });
            let report = series_identity_report(family, order)?;
            let detail = serde_json::to_string(&report).expect("report serializes");
            Ok(Check::new(
                format!("{family} series identities to order {order}"),
                report.all_hold(),
                detail,
            ))
        })
        .collect()
}

fn render_verify(report: &VerifyReport) -> Rendered {
    let mut plain: Vec<String> = report
        .checks
        .iter()
        .map(|c| {
            format!(
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        })
        .collect();
    let passed = report.checks.iter().filter(|c| c.passed).count();
    plain.push(format!(
        "{}: {passed}/{} checks passed",
        report.suite,
        report.checks.len()
    ));
    let mut csv = vec!["suite,check,passed,detail".to_string()];
    csv.extend(report.checks.iter().map(|c| {
        format!(
            "{},{},{},{}",
            report.suite,
            csv_field(&c.name),
            c.passed,
            csv_field(&c.detail)
        )
    }));
    Rendered {
        plain: plain.join("\n"),
        json: json!(report),
        csv: csv.join("\n"),
    }
}

pub fn cmd_sweep(config: &JobConfig) -> CliResult<Outcome> {
    let Job::Sweep {
        family,
        dmax,
        certificates,
    } = &config.job
    else {
        return Err(CliError::Usage("not a sweep job".to_string()));
    };
    let report = conjecture_sweep(*family, *dmax, *certificates)?;
    let verdict = |row: &zpoly::roots::SweepRow| match &row.interlace {
        None => "-".to_string(),
        Some(InterlaceVerdict::StrictInterlace) => "strict".to_string(),
        Some(InterlaceVerdict::WeakInterlace) => "weak".to_string(),
        Some(InterlaceVerdict::NoInterlace { witness }) => format!("no(witness {witness})"),
    };
    let mut plain: Vec<String> = report
        .rows
        .iter()
        .map(|row| {
            format!(
                "{} d={} real-rooted={} interlace={} digits={} ms={}",
                if row.passed() { "PASS" } else { "FAIL" },
                row.d,
                row.negative_real_rooted,
                verdict(row),
                row.max_coeff_digits,
                row.millis
            )
        })
        .collect();
    let failures = report.failures().len();
    plain.push(format!(
        "{family}: {} of {} ranks passed",
        report.rows.len() - failures,
        report.rows.len()
    ));
    let mut csv = vec!["family,d,negative_real_rooted,interlace,max_coeff_digits,millis".to_string()];
    csv.extend(report.rows.iter().map(|row| {
        format!(
            "{},{},{},{},{},{}",
            row.family,
            row.d,
            row.negative_real_rooted,
            csv_field(&verdict(row)),
            row.max_coeff_digits,
            row.millis
        )
    }));
    let rendered = Rendered {
        plain: plain.join("\n"),
        json: json!(report),
        csv: csv.join("\n"),
    };
    Ok(rendered.into_outcome(config.format, Status::from_passed(report.all_passed())))
}
