//! Library side of the `zpoly` binary: argument definitions, job resolution and
//! the four commands.

mod args;
mod bench;
mod compute;
mod config;
mod output;
mod verify;

pub use args::{
    BenchArgs, BenchTarget, Cli, Command, ComputeArgs, Format, Quantity, SourceArgs, SweepArgs, VerifyArgs,
};
pub use bench::{cmd_bench, BenchRow};
pub use compute::cmd_compute;
pub use config::{JobConfig, MatroidSource, MethodChoice};
pub use output::{Outcome, Status};
pub use verify::{cmd_sweep, cmd_verify, Check, Suite, VerifyReport};

use std::fmt;

/// Environment variable bounding the worker pool.
pub const THREADS_ENV: &str = "ZPOLY_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent arguments.
    Usage(String),
    /// Unreadable or invalid input, or a computation rejected by the library.
    Input(zpoly::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(msg) => f.write_str(msg),
            Self::Input(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<zpoly::Error> for CliError {
    fn from(err: zpoly::Error) -> Self {
        Self::Input(err)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Sizes the global thread pool from [`THREADS_ENV`] when set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize =
        value.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {value:?}"))
        })?;
    // a second call in the same process (tests) finds the pool already built
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    configure_threads()?;
    let config = JobConfig::from_cli(cli)?;
    match &cli.command {
        Command::Compute(_) => cmd_compute(&config),
        Command::Verify(_) => cmd_verify(&config),
        Command::Sweep(_) => cmd_sweep(&config),
        Command::Bench(_) => cmd_bench(&config),
    }
}
