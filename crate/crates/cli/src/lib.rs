//! Command-line driver for `skewbetti-core`.
//!
//! Exit status is 0 on success, 2 for invalid input, 3 when a cross-check
//! or structural check fails, and 1 for anything else.

pub mod args;
pub mod commands;
pub mod engine;
pub mod fuzz;
pub mod input;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::{Context, Outcome};
use crate::input::Invalid;

pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;

pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let ctx = Context::new(cli.opts.clone())?;
    match &cli.command {
        Command::Ferrers { lambda, mu, action } => commands::ferrers(&ctx, lambda, mu, *action),
        Command::Graph { edges, action } => commands::graph(&ctx, edges, *action),
        Command::Closed { edges, labeling } => commands::closed(&ctx, edges, labeling.as_deref()),
        Command::Fuzz {
            seed,
            count,
            max_rows,
            max_cols,
            skip,
        } => fuzz::run(&ctx, *seed, *count, *max_rows, *max_cols, skip),
    }
}

fn is_invalid_input(e: &anyhow::Error) -> bool {
    e.downcast_ref::<Invalid>().is_some() || e.downcast_ref::<skewbetti_core::Error>().is_some()
}

pub fn run(args: impl IntoIterator<Item = OsString>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let start = Instant::now();
    let outcome = execute(&cli);
    let elapsed = start.elapsed();
    match outcome {
        Ok(out) => {
            let body = if cli.opts.json { out.report.to_json() } else { out.text };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            eprintln!("time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            if out.report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_invalid_input(&e) {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
