//! Library half of the `faircut` binary: argument definitions, command
//! implementations and report rendering. `main.rs` only parses, dispatches
//! and exits.

pub mod commands;
pub mod report;
pub mod table;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const TOO_LARGE: i32 = 3;
    pub const MODEL_MISMATCH: i32 = 4;
    pub const UNKNOWN_ALGORITHM: i32 = 5;
    pub const BAD_GENERATOR: i32 = 6;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<faircut::Error> for CliError {
    fn from(e: faircut::Error) -> Self {
        use faircut::Error as E;
        let code = match &e {
            E::TooLarge { .. } => exit::TOO_LARGE,
            E::ModelMismatch { .. } | E::DegreeZero { .. } => exit::MODEL_MISMATCH,
            E::Certificate { .. } | E::Oracle { .. } => exit::VERIFICATION_FAILED,
            E::InvalidGraph(_) | E::InvalidPartition(_) | E::InvalidParameter(_) | E::InvalidEmbedding(_) => {
                exit::PARSE
            }
        };
        CliError::new(code, e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "faircut", version, about = "Exact maximin-fair Max-Cut solver and bound checker")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Largest vertex count the exact solvers will enumerate (at most 63).
    #[arg(long, global = true, default_value_t = faircut::exact::DEFAULT_LIMIT)]
    pub limit: usize,
    /// Restrict objectives to value (MV, SF-MV, DF-MV) or proportion (MP, SF-MP, DF-MP).
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// Add a decimal column next to exact fractions.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Leave the timestamp and timing out of the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Write the JSON report (or generated instance) to this path.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Print the JSON report on stdout instead of the table.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute objectives of an instance file exactly.
    Solve {
        instance: PathBuf,
        /// Comma-separated subset, e.g. MP,DF-MP (default: all).
        #[arg(long, value_delimiter = ',')]
        objectives: Vec<String>,
    },
    /// Run a heuristic on an instance file.
    Run {
        instance: PathBuf,
        /// separate-solve | naive-random | local-search | gw
        #[arg(long, short)]
        algorithm: String,
        /// Monte Carlo trials or rounding samples.
        #[arg(long)]
        trials: Option<u64>,
        /// gw: unit vectors, one line per vertex (default: solve the SDP).
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// gw: coordinate-ascent sweeps when solving the SDP.
        #[arg(long, default_value_t = 200)]
        iterations: usize,
        /// gw: embedding dimension when solving the SDP.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Write an instance from one of the built-in families.
    Generate(GenerateArgs),
    /// Run bound-check suites and golden instance files.
    Verify {
        /// paper (the curated worked examples and families; alias: curated) | random | all | none
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Random instances in the random suite.
        #[arg(long, default_value_t = 200)]
        count: u64,
        /// Instance files whose expected values are re-checked.
        #[arg(long, num_args = 1..)]
        instances: Vec<PathBuf>,
    },
    /// Recompute every worked value and family formula in one table.
    Reproduce,
    /// Tab-separated MP, DF-MP and SF-MP over a family parameter, for plotting.
    Trend {
        /// clique-tail (varies n) | cycle-biclique (varies r) | odd-cycle-edges | odd-cycle-nodes (vary n)
        family: String,
        /// Fixed k for clique-tail and cycle-biclique.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Largest value of the varied parameter.
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    /// cycle | complete | complete-bipartite | clique-tail | cycle-biclique |
    /// diamond | paw | random
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long)]
    pub p: Option<f64>,
    /// Number of groups for random partitions.
    #[arg(long)]
    pub groups: Option<usize>,
    /// singleton-edges | singleton-nodes | whole-edges | whole-nodes | random-edges | random-nodes
    #[arg(long)]
    pub partition: Option<String>,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub report: Option<report::Report>,
    /// Human-readable text for stdout.
    pub text: String,
    /// Raw file content for `--output` (instance text for `generate`).
    pub file: Option<String>,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    commands::dispatch(cli)
}
