use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zpoly::matroid::DEFAULT_FLAT_CAP;
use zpoly::NiceFamily;

#[derive(Debug, Parser)]
#[command(
    name = "zpoly",
    version,
    about = "Kazhdan-Lusztig and Z-polynomials of matroids"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a polynomial or number for one matroid.
    Compute(ComputeArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Root and interlacing sweep over a family.
    Sweep(SweepArgs),
    /// Time the family recursion against the generic computation.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Kazhdan-Lusztig polynomial.
    Kl,
    /// Z-polynomial.
    Z,
    /// Characteristic polynomial.
    Chi,
    /// Multi-indexed Whitney number for `--profile`.
    Whitney,
    /// Coefficient `--i` of the Kazhdan-Lusztig polynomial by the closed formula.
    Coeff,
    /// Individual terms of the closed formula for coefficient `--i`.
    Terms,
    /// Number of flats of each rank.
    Flats,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Matroid JSON file.
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    /// Matroid JSON given inline.
    #[arg(long)]
    pub json: Option<String>,
    /// Family descriptor: braid, typeb, uniform:M or qvec:Q.
    #[arg(long)]
    pub family: Option<NiceFamily>,
    /// Rank within the family.
    #[arg(long)]
    pub d: Option<usize>,
    /// Refuse lattices with more flats than this.
    #[arg(long, default_value_t = DEFAULT_FLAT_CAP)]
    pub flat_cap: usize,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub quantity: Quantity,
    #[command(flatten)]
    pub source: SourceArgs,
    /// defining, mobius, recursion, closed or family.
    #[arg(long, conflicts_with = "all_methods")]
    pub method: Option<String>,
    /// Compute the Kazhdan-Lusztig polynomial by every method and compare.
    #[arg(long)]
    pub all_methods: bool,
    /// Corank profile `i_r,...,i_1` for `whitney`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub profile: Option<Vec<i64>>,
    /// Coefficient index for `coeff` and `terms`.
    #[arg(long, allow_hyphen_values = true)]
    pub i: Option<i64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// palindrome, crossmethod, narayana, gaussian, qshift, roots, interlace, logconcave, schur or series.
    pub suite: String,
    /// Families to check; each suite has its own default list.
    #[arg(long = "family", value_delimiter = ',')]
    pub families: Vec<NiceFamily>,
    /// Largest rank checked.
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Matroid corpus: small or none.
    #[arg(long)]
    pub corpus: Option<String>,
    /// Field sizes for the gaussian and qshift suites.
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<u64>,
    /// Truncation order for the series suite.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: NiceFamily,
    #[arg(long)]
    pub dmax: usize,
    /// Include root-isolating intervals in the report.
    #[arg(long)]
    pub certificates: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchTarget {
    Braid,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub target: BenchTarget,
    /// Rank, or an inclusive range `A..B`.
    #[arg(long)]
    pub d: String,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    /// Skip the generic computation.
    #[arg(long)]
    pub fast_only: bool,
    #[arg(long, default_value_t = DEFAULT_FLAT_CAP)]
    pub flat_cap: usize,
}
