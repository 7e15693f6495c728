use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;
use zpoly::families::kl_family;
use zpoly::klz::kl_defining;
use zpoly::matroid::{enumerate_flats_capped, MatroidSpec};
use zpoly::{IntPolynomial, NiceFamily};

use crate::config::{Job, JobConfig};
use crate::output::{csv_field, Outcome, Rendered, Status};
use crate::{CliError, CliResult};

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub d: usize,
    pub polynomial: String,
    pub family_ms: f64,
    /// Flats of the partition lattice on `d + 1` points.
    pub flats: String,
    pub enumerate_ms: Option<f64>,
    pub defining_ms: Option<f64>,
    pub speedup: Option<f64>,
    pub agree: Option<bool>,
    /// Why the generic computation was not run.
    pub skipped: Option<String>,
}

/// Best of `reps` runs.
fn time_best<T>(reps: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..reps {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed());
        out = Some(value);
    }
    (out.expect("reps >= 1"), best)
}

fn bell(n: usize) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![row.last().expect("nonempty").clone()];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn cmd_bench(config: &JobConfig) -> CliResult<Outcome> {
    let Job::Bench {
        ranks,
        reps,
        fast_only,
        flat_cap,
    } = &config.job
    else {
        return Err(CliError::Usage("not a bench job".to_string()));
    };
    let mut rows = Vec::new();
    for d in ranks.clone() {
        let (fast, fast_time) = time_best(*reps, || kl_family(NiceFamily::Braid, d));
        let fast: IntPolynomial = fast?;
        let flats = bell(d + 1);
        let mut row = BenchRow {
            d,
            polynomial: fast.to_string(),
            family_ms: ms(fast_time),
            flats: flats.to_string(),
            enumerate_ms: None,
            defining_ms: None,
            speedup: None,
            agree: None,
            skipped: None,
        };
        if *fast_only {
            row.skipped = Some("fast-only".to_string());
        } else if flats > BigInt::from(*flat_cap) {
            row.skipped = Some(format!("{flats} flats exceed the cap of {flat_cap}"));
        } else {
            let start = Instant::now();
            let lat = enumerate_flats_capped(&MatroidSpec::complete_graph(d + 1), *flat_cap)?;
            row.enumerate_ms = Some(ms(start.elapsed()));
            let (slow, slow_time) = time_best(*reps, || kl_defining(&lat));
            row.defining_ms = Some(ms(slow_time));
            row.speedup = Some(slow_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9));
            row.agree = Some(slow == fast);
        }
        rows.push(row);
    }
    let passed = rows.iter().all(|r| r.agree != Some(false));
    let fmt_opt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
    let mut plain: Vec<String> = rows
        .iter()
        .map(|r| {
            let mut line = format!("d={} family {:.3} ms", r.d, r.family_ms);
            match &r.skipped {
                Some(reason) => line.push_str(&format!(", generic skipped ({reason})")),
                None => line.push_str(&format!(
                    ", generic {} ms on {} flats (+{} ms to enumerate), speedup {}x, {}",
                    fmt_opt(r.defining_ms),
                    r.flats,
                    fmt_opt(r.enumerate_ms),
                    r.speedup.map_or("-".to_string(), |s| format!("{s:.1}")),
                    if r.agree == Some(true) {
                        "AGREE"
                    } else {
                        "DISAGREE"
                    }
                )),
            }
            line
        })
        .collect();
    if let Some(last) = rows.last() {
        plain.push(format!("P_{} = {}", last.d, last.polynomial));
    }
    let mut csv = vec!["d,family_ms,flats,enumerate_ms,defining_ms,speedup,agree,skipped".to_string()];
    csv.extend(rows.iter().map(|r| {
        format!(
            "{},{:.3},{},{},{},{},{},{}",
            r.d,
            r.family_ms,
            r.flats,
            fmt_opt(r.enumerate_ms),
            fmt_opt(r.defining_ms),
            fmt_opt(r.speedup),
            r.agree.map_or("-".to_string(), |a| a.to_string()),
            csv_field(r.skipped.as_deref().unwrap_or("")),
        )
    }));
    let rendered = Rendered {
        plain: plain.join("\n"),
        json: json!({ "target": "braid", "rows": rows }),
        csv: csv.join("\n"),
    };
    Ok(rendered.into_outcome(config.format, Status::from_passed(passed)))
}
