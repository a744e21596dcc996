mod commands;
mod manifest;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use tcc_core::Error;

#[derive(Parser)]
#[command(name = "tcc", version, about = "Classify ternary linear codes up to monomial equivalence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all [10,5,d] codes for d = 3 or 4.
    Classify10 {
        #[arg(long, value_name = "D")]
        min_weight: u8,
        #[arg(long, env = "TCC_OUT", default_value = "out")]
        out: PathBuf,
        /// Worker threads (defaults to available parallelism).
        #[arg(long)]
        threads: Option<usize>,
        /// Reuse branch checkpoints from an earlier run.
        #[arg(long)]
        resume: bool,
        #[arg(long, short)]
        quiet: bool,
    },
    /// Extend [10,5] representatives to [12,5] codes satisfying (C1)-(C3).
    #[command(group(ArgGroup::new("input").required(true).args(["reps", "fixtures_only"])))]
    Extend {
        /// Directory holding reps-10-5-{3,4}.codes and their summaries.
        #[arg(long)]
        reps: Option<PathBuf>,
        /// Only extend the built-in [10,5,5] code.
        #[arg(long)]
        fixtures_only: bool,
        #[arg(long, env = "TCC_OUT", default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print invariants of the codes in an archive.
    Analyze {
        codes: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the published constants and compare.
    #[command(group(ArgGroup::new("mode").required(true).args(["quick", "full"])))]
    Verify {
        /// The d = 4 classification and the [10,5,5] extension only.
        #[arg(long)]
        quick: bool,
        /// Everything, including the d = 3 classification.
        #[arg(long)]
        full: bool,
        /// Check existing archives instead of recomputing them.
        #[arg(long)]
        reps: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } | Error::Json { .. } | Error::Parse { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    let result = match cli.command {
        Command::Classify10 {
            min_weight,
            out,
            threads,
            resume,
            quiet,
        } => commands::classify10(&argv, min_weight, &out, threads, resume, quiet),
        Command::Extend {
            reps,
            fixtures_only: _,
            out,
            threads,
        } => commands::extend(&argv, reps.as_deref(), &out, threads),
        Command::Analyze { codes, json } => commands::analyze(&codes, json),
        Command::Verify {
            quick: _,
            full,
            reps,
            threads,
        } => verify::run(full, reps.as_deref(), threads),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
