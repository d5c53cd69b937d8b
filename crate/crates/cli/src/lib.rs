//! Command-line front end for the Littlewood-Schur and unitary-average
//! libraries: single computations, identity suites and Monte Carlo runs,
//! each reported with its resolved configuration.

pub mod args;
mod compute;
mod mc;
mod output;
pub mod parse;
mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

pub use args::{Cli, Command, OutputFormat};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "ls-rmt/1";

/// Failure modes of a run.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad arguments or violated preconditions.
    Usage(String),
    /// Output could not be written.
    Io(String),
}

/// The resolved configuration echoed in every output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
    pub tolerance: Option<f64>,
    pub output: OutputFormat,
    pub workers: usize,
}

/// What a command produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub config: RunConfig,
    pub result: Value,
    /// `Some(false)` for a failed verification.
    pub pass: Option<bool>,
    /// CSV header and rows.
    pub table: (Vec<String>, Vec<Vec<String>>),
}

impl Outcome {
    /// Process exit code: 0 pass, 1 verification failure.
    pub fn exit_code(&self) -> i32 {
        if self.pass == Some(false) {
            1
        } else {
            0
        }
    }
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute { target } => compute::run(cli, target),
        Command::Verify(v) => verify::run(cli, v),
        Command::Mc(m) => mc::run(cli, m),
    }
}

/// Renders an outcome in the requested format.
pub fn render(outcome: &Outcome) -> Result<String, CliError> {
    output::render(outcome)
}

/// Parses, runs and prints; returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match render(&outcome) {
        Ok(text) => print!("{text}"),
        Err(CliError::Usage(msg)) | Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    }
    if outcome.pass == Some(false) {
        if let Some(failed) = outcome.result.get("failures") {
            eprintln!("verification failed: {failed}");
        }
    }
    outcome.exit_code()
}

pub(crate) fn config(cli: &Cli, command: &str, target: Option<&str>, params: BTreeMap<String, Value>, tolerance: Option<f64>) -> RunConfig {
    RunConfig {
        command: command.to_string(),
        target: target.map(str::to_string),
        params,
        seed: cli.seed,
        tolerance,
        output: cli.output,
        workers: cli.workers,
    }
}

pub(crate) fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}
