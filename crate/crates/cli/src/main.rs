mod cli;
mod commands;
mod emit;
mod source;

use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use crate::cli::{Cli, Command};
use crate::commands::Outcome;

fn configure_threads(jobs: Option<usize>) -> Result<()> {
    if let Some(jobs) = jobs {
        anyhow::ensure!(jobs >= 1, "--jobs must be at least 1");
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot configure worker threads")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Theta(args) => commands::theta(args),
        Command::ArgZeta(args) => commands::arg_zeta(args),
        Command::ArgGamma(args) => commands::arg_gamma(args),
        Command::Zeros(args) => {
            configure_threads(args.jobs)?;
            commands::zeros(args)
        }
        Command::Counts(args) => {
            configure_threads(args.zeros.jobs)?;
            commands::counts(args)
        }
        Command::Table(args) => commands::table(args),
        Command::Sequences(args) => commands::sequences(args),
        Command::Estimate(args) => {
            configure_threads(args.zeros.jobs)?;
            commands::estimate(args)
        }
        Command::Staircase(args) => {
            configure_threads(args.zeros.jobs)?;
            commands::staircase_cmd(args)
        }
        Command::Render(args) => {
            configure_threads(args.zeros.jobs)?;
            commands::render(args)
        }
        Command::Verify(args) => commands::verify(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
