//! `ditlab`: logical entropies of partitions, observables, and density matrices.

mod commands;
mod input;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Schema(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("resource limit: {0}")]
    Limit(String),
    #[error("output error: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Limit(_) => 4,
        }
    }
}

impl From<ditlab::Error> for CliError {
    fn from(e: ditlab::Error) -> Self {
        use ditlab::Error::*;
        match e {
            BoundExceeded { .. } => CliError::Limit(e.to_string()),
            Syntax { .. }
            | UnboundVariable(_)
            | EmptyUniverse
            | UniverseMismatch(..)
            | LengthMismatch(..)
            | DimensionMismatch(..)
            | NotSquare(..)
            | IndexOutOfRange { .. } => CliError::Schema(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "ditlab", version, about = "Logical entropy of partitions, observables, and density matrices")]
struct Cli {
    /// Report encoding.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Logical (and optionally Shannon) entropies of one or two partitions.
    Entropy(EntropyArgs),
    /// Bounded search for a counterexample to a partition formula.
    Tautology(TautologyArgs),
    /// Project a state onto the eigenspaces of an observable.
    Measure(MeasureArgs),
    /// Cross-entropy and logical Hamming distance of two density matrices.
    Distance(DistanceArgs),
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    #[arg(long)]
    pub pi: PathBuf,
    /// Point distribution; omit in two-set mode.
    #[arg(long, required_unless_present = "joint")]
    pub p: Option<PathBuf>,
    #[arg(long)]
    pub sigma: Option<PathBuf>,
    /// Also report Shannon entropies and the dit-bit transform checks.
    #[arg(long)]
    pub shannon: bool,
    /// Joint distribution on X x Y; `--pi` partitions X and `--sigma` partitions Y.
    #[arg(long, requires = "sigma", conflicts_with = "p")]
    pub joint: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TautologyArgs {
    #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
    pub formula: Option<PathBuf>,
    #[arg(long)]
    pub expr: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    /// Uniform six-point universe measured by parity.
    DieParity,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long, required_unless_present = "demo", requires = "observable")]
    pub state: Option<PathBuf>,
    #[arg(long, required_unless_present = "demo")]
    pub observable: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with_all = ["state", "observable"])]
    pub demo: Option<Demo>,
    /// Include the post-measurement density matrix.
    #[arg(long)]
    pub emit_density: bool,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[arg(long)]
    pub rho: PathBuf,
    #[arg(long)]
    pub tau: PathBuf,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let report = match &cli.command {
        Command::Entropy(a) => commands::entropy(a)?,
        Command::Tautology(a) => commands::tautology(a)?,
        Command::Measure(a) => commands::measure(a)?,
        Command::Distance(a) => commands::distance(a)?,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => report.write_json(&mut out)?,
        Format::Csv => report.write_csv(&mut out)?,
    }
    out.flush().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("ditlab: an identity check failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("ditlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
