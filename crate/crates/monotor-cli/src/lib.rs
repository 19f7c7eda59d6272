//! Batch front-end: parses JSON descriptions of rings, ideals, subgroups,
//! fans and modules, dispatches one operation per invocation, and emits a
//! deterministic JSON report (object keys sorted, integers canonical).
//!
//! Exit codes: 0 on success, 2 on domain errors, 3 on schema errors.

pub mod input;
pub mod report;
pub mod run;
pub mod suite;

use clap::Parser;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "monotor",
    version,
    about = "Decisions about torsion functors with monomial support, \
             graded Cech degree supports, and toric flat-degree reports"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: run::Command,
    /// Input JSON file ("-" for stdin).
    #[arg(long = "in", value_name = "FILE", global = true)]
    pub input: Option<String>,
    /// Degree window "a,b" over the free coordinate of the grading group.
    #[arg(long, value_name = "A,B", global = true, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Exponent box radius for graded-piece enumeration.
    #[arg(long = "box", value_name = "K", global = true, default_value_t = 8)]
    pub box_radius: u32,
    /// Seed for the randomized agreement suites.
    #[arg(long, value_name = "N", global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<String>,
}

pub fn run_main() -> ExitCode {
    let cli = Cli::parse();
    match run::dispatch(&cli) {
        Ok(json) => {
            let payload = format!("{json:#}\n");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &payload) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{payload}");
            }
            ExitCode::SUCCESS
        }
        Err(run::CliError::Schema(msg)) => {
            eprintln!("schema error: {msg}");
            ExitCode::from(3)
        }
        Err(run::CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
