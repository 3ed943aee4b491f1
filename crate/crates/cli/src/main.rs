//! `spectra`: distinct-eigenvalue checks for graphs from the command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for bad input or usage.

mod census;
mod check;
mod demo;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectra_core::characterization::DEFAULT_TOL;
use spectra_core::GraphMatrix;

#[derive(Parser)]
#[command(
    name = "spectra",
    version,
    about = "Distinct-eigenvalue characterizations of graph spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one graph given in graph6 format.
    Check(CheckArgs),
    /// Check every labeled graph on n vertices, or every graph in a graph6 file.
    Census(CensusArgs),
    /// Reproduce the f(x) = x^3 + x^2 + 6 counterexample exactly.
    Demo,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
    Signless,
    Normalized,
    All,
}

impl MatrixArg {
    fn kinds(self) -> Vec<GraphMatrix> {
        match self {
            Self::Adjacency => vec![GraphMatrix::Adjacency],
            Self::Laplacian => vec![GraphMatrix::Laplacian],
            Self::Signless => vec![GraphMatrix::Signless],
            Self::Normalized => vec![GraphMatrix::Normalized],
            Self::All => GraphMatrix::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph in graph6 format, e.g. "Bw" for the triangle.
    graph6: String,
    #[arg(long, value_enum, default_value = "all")]
    matrix: MatrixArg,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Also require all n eigenvalues to be distinct.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["n", "input"]))]
struct CensusArgs {
    /// Enumerate all labeled graphs on this many vertices (at most 7).
    #[arg(long)]
    n: Option<usize>,
    /// Read graphs from a graph6 file, one per line; `#` starts a comment.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    matrix: MatrixArg,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Worker threads; 0 uses every CPU.
    #[arg(long, env = "SPECTRA_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Write records here: JSON if the name ends in .json, CSV otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write CSV records to stdout; the summary then goes to stderr.
    #[arg(long)]
    emit_records: bool,
    /// Permit n = 8 (2^28 graphs; slow and not part of the supported range).
    #[arg(long)]
    allow_n8: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Outcome of a subcommand before it becomes an exit code.
pub(crate) enum Outcome {
    Pass,
    Fail,
}

pub(crate) fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => check::run(&args),
        Command::Census(args) => census::run(&args),
        Command::Demo => Ok(demo::run()),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(code) => code,
    }
}
