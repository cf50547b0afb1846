//! Batch front end for `mullineux-core`.
//!
//! Every subcommand produces a [`CommandResult`]: a status, a JSON payload and
//! a human rendering of the same data. The binary prints one or the other and
//! exits with 0 exactly when the status is ok.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

mod commands;
mod render;

pub use commands::*;

#[derive(Debug, Parser)]
#[command(name = "mullineux", version, about = "Mullineux map, Serganova's algorithm and desk-scale verification")]
pub struct Cli {
    /// Print the JSON payload instead of the human rendering.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mullineux conjugate of a p-restricted partition.
    Mullineux {
        /// Parts separated by commas, e.g. "5,4,3,3,1,1"; "" is the empty partition.
        partition: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Algo::Both)]
        algo: Algo,
    },
    /// Mullineux symbol (p-rim sizes and row counts).
    Symbol {
        partition: String,
        #[arg(long)]
        p: u64,
        /// Rebuild the partition from the symbol and compare.
        #[arg(long)]
        round_trip: bool,
    },
    /// Iterates of Xu's J map with their j-values.
    Jchain {
        partition: String,
        #[arg(long)]
        p: u64,
    },
    /// Serganova's algorithm with the full step trace.
    Serganova(SerganovaArgs),
    /// Enumerate dominant polynomial weights and classify them.
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
    },
    /// Run one of the verification sweeps.
    Verify(VerifyArgs),
    /// Structure constants of the Schur superalgebra S(m|n,d).
    SchurTable {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Refuse algebras whose basis is larger than this.
        #[arg(long, default_value_t = 200)]
        max_size: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Symbol,
    Xu,
    Both,
}

#[derive(Debug, Args)]
pub struct SerganovaArgs {
    /// Coordinates, e.g. "1,1,2,0" or "1,1|2,0".
    #[arg(required_unless_present = "bridge")]
    pub weight: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: u64,
    /// "default" (column by column), "row-major", an inline list such as
    /// "2:3,2:4,1:3,1:4", or "@path" to read the list from a file.
    #[arg(long, default_value = "default")]
    pub order: String,
    /// Instead of a weight, check that the sweep of x(λ) lands on y(M(λ)) with m = n = |λ|.
    #[arg(long, conflicts_with = "weight")]
    pub bridge: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MullineuxMaps,
    SerganovaBridge,
    Schur,
    Conjecture,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Primes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u64>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree (schur) or largest degree (conjecture).
    #[arg(long)]
    pub d: Option<usize>,
    /// Largest partition size (mullineux-maps) or degree (serganova-bridge).
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    #[serde(skip)]
    pub human_text: String,
}

impl CommandResult {
    fn new(pass: bool, payload: Value, human_text: String) -> Self {
        let status = if pass { Status::Ok } else { Status::Fail };
        CommandResult { status, payload, human_text }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("payload is plain JSON")
        } else {
            self.human_text.clone()
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mullineux_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for usage problems, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub fn run(cli: &Cli) -> Result<CommandResult, CliError> {
    match &cli.command {
        Command::Mullineux { partition, p, algo } => cmd_mullineux(partition, *p, *algo),
        Command::Symbol { partition, p, round_trip } => cmd_symbol(partition, *p, *round_trip),
        Command::Jchain { partition, p } => cmd_jchain(partition, *p),
        Command::Serganova(args) => cmd_serganova(args),
        Command::Classify { m, n, d, p } => cmd_classify(*m, *n, *d, *p),
        Command::Verify(args) => cmd_verify(args),
        Command::SchurTable { m, n, d, max_size } => cmd_schur_table(*m, *n, *d, *max_size),
    }
}
