use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use zpoly::families::family_matroid_spec;
use zpoly::klz::KlMethod;
use zpoly::matroid::{enumerate_flats_capped, FlatLattice, MatroidSpec};
use zpoly::NiceFamily;

use crate::args::{Cli, Command, Format, Quantity, SourceArgs};
use crate::verify::Suite;
use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidSource {
    File(PathBuf),
    Inline(String),
    Family { family: NiceFamily, d: usize },
}

impl MatroidSource {
    fn from_args(args: &SourceArgs) -> CliResult<Self> {
        let given = [args.matroid.is_some(), args.json.is_some(), args.family.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Usage(
                "give exactly one of --matroid, --json or --family".to_string(),
            ));
        }
        if let Some(path) = &args.matroid {
            return Ok(Self::File(path.clone()));
        }
        if let Some(text) = &args.json {
            return Ok(Self::Inline(text.clone()));
        }
        let family = args.family.expect("checked above");
        let d = args
            .d
            .ok_or_else(|| CliError::Usage("--family needs --d".to_string()))?;
        Ok(Self::Family { family, d })
    }

    pub fn family(&self) -> Option<(NiceFamily, usize)> {
        match *self {
            Self::Family { family, d } => Some((family, d)),
            _ => None,
        }
    }

    pub fn spec(&self) -> CliResult<MatroidSpec> {
        Ok(match self {
            Self::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                MatroidSpec::from_json(&text)?
            }
            Self::Inline(text) => MatroidSpec::from_json(text)?,
            Self::Family { family, d } => family_matroid_spec(*family, *d)?,
        })
    }

    pub fn lattice(&self, flat_cap: usize) -> CliResult<FlatLattice> {
        Ok(enumerate_flats_capped(&self.spec()?, flat_cap)?)
    }

    pub fn label(&self) -> String {
        match self {
            Self::File(path) => path.display().to_string(),
            Self::Inline(_) => "inline".to_string(),
            Self::Family { family, d } => format!("{family} d={d}"),
        }
    }
}

/// A Kazhdan-Lusztig route: one of the generic lattice methods, or the family recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Generic(KlMethod),
    Family,
}

impl FromStr for MethodChoice {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        if s == "family" {
            return Ok(Self::Family);
        }
        s.parse().map(Self::Generic).map_err(|_| {
            CliError::Usage(format!(
                "unknown method {s:?}; expected defining, mobius, recursion, closed or family"
            ))
        })
    }
}

impl MethodChoice {
    pub fn name(self) -> &'static str {
        match self {
            Self::Generic(m) => m.name(),
            Self::Family => "family",
        }
    }
}

/// A fully validated invocation.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub format: Format,
    pub job: Job,
}

#[derive(Clone, Debug)]
pub enum Job {
    Compute {
        quantity: Quantity,
        source: MatroidSource,
        flat_cap: usize,
        method: Option<MethodChoice>,
        all_methods: bool,
        profile: Vec<i64>,
        i: Option<i64>,
    },
    Verify {
        suite: Suite,
        families: Vec<NiceFamily>,
        dmax: Option<usize>,
        corpus: bool,
        q: Vec<u64>,
        order: Option<usize>,
    },
    Sweep {
        family: NiceFamily,
        dmax: usize,
        certificates: bool,
    },
    Bench {
        ranks: RangeInclusive<usize>,
        reps: usize,
        fast_only: bool,
        flat_cap: usize,
    },
}

impl JobConfig {
    pub fn from_cli(cli: &Cli) -> CliResult<Self> {
        let job = match &cli.command {
            Command::Compute(args) => {
                let source = MatroidSource::from_args(&args.source)?;
                if args.all_methods && args.quantity != Quantity::Kl {
                    return Err(CliError::Usage(
                        "--all-methods applies to `compute kl` only".to_string(),
                    ));
                }
                if args.quantity == Quantity::Whitney && args.profile.is_none() {
                    return Err(CliError::Usage("`compute whitney` needs --profile".to_string()));
                }
                if matches!(args.quantity, Quantity::Coeff | Quantity::Terms) && args.i.is_none() {
                    return Err(CliError::Usage("this quantity needs --i".to_string()));
                }
                let method = args.method.as_deref().map(str::parse).transpose()?;
                if method == Some(MethodChoice::Family) && source.family().is_none() {
                    return Err(CliError::Usage(
                        "--method family needs a --family source".to_string(),
                    ));
                }
                Job::Compute {
                    quantity: args.quantity,
                    source,
                    flat_cap: args.source.flat_cap,
                    method,
                    all_methods: args.all_methods,
                    profile: args.profile.clone().unwrap_or_default(),
                    i: args.i,
                }
            }
            Command::Verify(args) => {
                let corpus = match args.corpus.as_deref() {
                    None | Some("small") => true,
                    Some("none") => false,
                    Some(other) => {
                        return Err(CliError::Usage(format!(
                            "unknown corpus {other:?}; expected small or none"
                        )))
                    }
                };
                Job::Verify {
                    suite: args.suite.parse()?,
                    families: args.families.clone(),
                    dmax: args.dmax,
                    corpus,
                    q: args.q.clone(),
                    order: args.order,
                }
            }
            Command::Sweep(args) => Job::Sweep {
                family: args.family,
                dmax: args.dmax,
                certificates: args.certificates,
            },
            Command::Bench(args) => {
                if args.reps == 0 {
                    return Err(CliError::Usage("--reps must be positive".to_string()));
                }
                Job::Bench {
                    ranks: parse_rank_range(&args.d)?,
                    reps: args.reps,
                    fast_only: args.fast_only,
                    flat_cap: args.flat_cap,
                }
            }
        };
        Ok(Self {
            format: cli.format,
            job,
        })
    }
}

/// `"8"` or `"3..8"` (inclusive).
fn parse_rank_range(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || CliError::Usage(format!("--d expects N or A..B, got {text:?}"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let d = parse(text)?;
            Ok(d..=d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_ranges() {
        assert_eq!(parse_rank_range("8").unwrap(), 8..=8);
        assert_eq!(parse_rank_range("3..6").unwrap(), 3..=6);
        assert_eq!(parse_rank_range("3..=6").unwrap(), 3..=6);
        assert!(parse_rank_range("6..3").is_err());
        assert!(parse_rank_range("x").is_err());
    }

    #[test]
    fn method_names() {
        assert_eq!("family".parse::<MethodChoice>().unwrap(), MethodChoice::Family);
        for m in KlMethod::ALL {
            assert_eq!(
                m.name().parse::<MethodChoice>().unwrap(),
                MethodChoice::Generic(m)
            );
        }
        assert!("fastest".parse::<MethodChoice>().is_err());
    }
}
