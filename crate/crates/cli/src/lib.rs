//! Command-line surface over `sccore`: tabulation, verification suites and
//! circle-method asymptotics, emitted as CSV or JSON reports.
//!
//! Exit codes: 0 when every check agrees, 1 for usage or cap errors, 2 when a
//! run finished but found disagreements.

pub mod commands;
pub mod config;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;

pub use config::{Cli, IntRange, RunConfig};
pub use report::{Cell, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] sccore::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    commands::run(cfg)
}

fn emit(cfg: &RunConfig, report: &Report) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            report.write(cfg.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            report.write(cfg.format, stdout.lock())?;
        }
    }
    Ok(())
}

/// Parses `args`, runs the command, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let report = run(&cfg)?;
        emit(&cfg, &report)?;
        Ok(report)
    });
    match result {
        Ok(report) => {
            if let Some(first) = report.disagreements.first() {
                eprintln!(
                    "{}: {} disagreement(s); first: {first}",
                    report.command,
                    report.disagreements.len()
                );
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
