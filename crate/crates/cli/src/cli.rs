use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "critline",
    version,
    about = "Arguments of zeta and gamma on the critical line, zero census and density images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Riemann-Siegel theta, optionally against its truncated large-t series
    Theta(ThetaArgs),
    /// (1/pi) Arg zeta(1/2 + it), principal value in (-1, 1]
    ArgZeta(PointsArgs),
    /// (1/pi) Arg Gamma(1/4 + it/2), principal value in (-1, 1]
    ArgGamma(PointsArgs),
    /// Scan for critical-line zeros and write a zero-cache file
    Zeros(ZerosArgs),
    /// Zeros per unit interval, F(n)
    Counts(CountsArgs),
    /// Argument, its approximation and the exact expansion for a range of n
    Table(TableArgs),
    /// Coefficient laws and normalized ruler sequences
    Sequences(SequencesArgs),
    /// Estimates of the n-th zero ordinate
    Estimate(EstimateArgs),
    /// Half-integer staircase g(n) + (1/pi) Arg zeta(1/2 + in)
    Staircase(StaircaseArgs),
    /// Grayscale density image of F(n) wrapped at a fixed width
    Render(RenderArgs),
    /// Replay the acceptance checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ZeroSourceArgs {
    /// Zero-cache or external zero-table files; several are merged. Without
    /// this flag the census in the cache directory is used, scanning it once
    /// if needed.
    #[arg(long = "zeros", value_name = "FILE")]
    pub files: Vec<PathBuf>,
    /// Worker threads for a scan (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    /// Ordinates
    #[arg(required = true, allow_negative_numbers = true)]
    pub t: Vec<f64>,
    /// Also evaluate the large-t series with this many correction terms
    #[arg(long)]
    pub order: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PointsArgs {
    /// Ordinates
    #[arg(required = true, allow_negative_numbers = true)]
    pub t: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    /// Lower end of the scan
    #[arg(long, default_value_t = 0.0)]
    pub min: f64,
    /// Upper end of the scan (at most 10000)
    #[arg(long)]
    pub max: f64,
    /// Grid step (at most 0.05)
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    /// Bisection tolerance
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Cache file to write (default: a file in the cache directory)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    /// Largest n
    #[arg(long, default_value_t = 6500)]
    pub n_max: u64,
    /// Only list the n with exactly this many zeros
    #[arg(long)]
    pub equal: Option<u32>,
    #[command(flatten)]
    pub zeros: ZeroSourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 1)]
    pub from: u64,
    #[arg(long, default_value_t = 19)]
    pub to: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    /// Coefficient of ln p in the expansion of index n
    Coefficients,
    /// Normalized ruler v_p(n) + 2 (p = 2) or v_p(n) + 1 (odd p)
    Ruler,
}

#[derive(Debug, Args)]
pub struct SequencesArgs {
    #[arg(long, default_value_t = 2)]
    pub prime: u64,
    #[arg(long, default_value_t = 16)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = SequenceKind::Coefficients)]
    pub kind: SequenceKind,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed form through Lambert W
    Lambert,
    /// Newton solution of the smooth counting equation
    Smooth,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long, default_value_t = 1)]
    pub from: u64,
    #[arg(long, default_value_t = 10)]
    pub to: u64,
    #[arg(long, value_enum, default_value_t = Method::Lambert)]
    pub method: Method,
    /// Add the actual ordinates and the differences
    #[arg(long)]
    pub compare: bool,
    #[command(flatten)]
    pub zeros: ZeroSourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StaircaseArgs {
    #[arg(long, default_value_t = 26)]
    pub n_max: u64,
    /// List only the n where the staircase count departs from the zero count
    #[arg(long)]
    pub defects: bool,
    #[command(flatten)]
    pub zeros: ZeroSourceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Pixels per row
    #[arg(long, default_value_t = 4000, conflicts_with = "beat_scale")]
    pub width: usize,
    /// Use the rounded beat width scale * 2pi / ln 2 as the row width
    #[arg(long)]
    pub beat_scale: Option<f64>,
    #[arg(long, default_value_t = 6500)]
    pub n_max: u64,
    /// Output graymap (binary PGM)
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub zeros: ZeroSourceArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only these check groups
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(critline::verify::GROUPS))]
    pub only: Vec<String>,
    /// Check this zero census instead of scanning afresh
    #[arg(long = "zeros", value_name = "FILE")]
    pub files: Vec<PathBuf>,
    /// Chunks for the partitioned comparison scan
    #[arg(long, default_value_t = 8)]
    pub parts: usize,
    /// Report format (text or json)
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
