//! `fcp`: fewest-clues solver, reduction checker, clue transfer and the
//! seeded property suite.
//!
//! Exit codes: 0 for success or YES, 1 for a well-formed negative answer,
//! 2 for errors and inconclusive runs.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fcp_core::problems::{DEFAULT_MAX_CANDIDATES, DEFAULT_MAX_SOLUTIONS};
use fcp_core::Limits;

#[derive(Parser)]
#[command(name = "fcp", version, about = "Fewest clues problem toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a uniquifying clue of size at most k exists.
    Solve {
        #[command(flatten)]
        input: InstanceArg,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the minimum clue number and a witness.
    Minclue {
        #[command(flatten)]
        input: InstanceArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check parsimony and the per-index conditions of a reduction.
    CheckReduction {
        #[command(flatten)]
        input: InstanceArg,
        #[arg(long)]
        reduction: ReductionArg,
        /// Defaults to `declared` when the reduction declares a map,
        /// `infer` otherwise.
        #[arg(long)]
        mode: Option<ModeArg>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Move a clue across a reduction.
    Transfer {
        #[command(flatten)]
        input: InstanceArg,
        #[arg(long, default_value = "dup-pad")]
        reduction: ReductionArg,
        #[arg(long)]
        direction: DirectionArg,
        /// Clue text, `_` for blank positions.
        #[arg(
            long,
            conflicts_with = "clue_file",
            required_unless_present = "clue_file"
        )]
        clue: Option<String>,
        /// File holding the clue on one line.
        #[arg(long)]
        clue_file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the property suite on seeded random instances.
    Experiment {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print a seeded random instance file.
    Generate {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the parity variant header.
        #[arg(long)]
        parity: bool,
    },
}

#[derive(Args)]
struct InstanceArg {
    /// Instance file (`p 1in3 ...` or `p parity1in3 ...`).
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Args, Clone, Copy)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_MAX_SOLUTIONS, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    cap_solutions: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES, value_parser = clap::value_parser!(u64).range(1..))]
    cap_candidates: u64,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_candidates: self.cap_candidates,
            max_solutions: self.cap_solutions,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    #[value(name = "dup-pad")]
    DupPad,
    #[value(name = "parity")]
    Parity,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Declared,
    Infer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            commands::exit_error()
        }
    }
}
