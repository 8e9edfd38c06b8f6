//! The `qaskey` command line: `verify`, `eval` and `table`.
//!
//! Exit codes: 0 when every check passes, 1 when any fails or errors, 2 for
//! configuration errors (bad flags, inadmissible parameters).

mod config;
mod eval;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub use config::GridArgs;
pub use report::{ReportDocument, Summary};

#[derive(Debug, Parser)]
#[command(name = "qaskey", version, about = "Exact verification of (q-)Askey scheme identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and report every check.
    Verify(VerifyArgs),
    /// Evaluate one family member exactly.
    Eval(eval::FamilyArgs),
    /// Print values, weights or norms as CSV.
    Table(eval::TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Plain `key = value` file with defaults; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads (0 picks the number of cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError(e.to_string())
    }
}

impl From<std::io::Error> for ConfigError {
    fn from(e: std::io::Error) -> Self {
        ConfigError(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => verify(a, out),
        Command::Eval(a) => eval::cmd_eval(&a, out).map(|_| 0),
        Command::Table(a) => eval::cmd_table(&a, out).map(|_| 0),
    };
    match outcome {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, ConfigError> {
    let resolved = config::resolve(&args)?;
    let started = std::time::Instant::now();
    let checks = crate::suites::run_suite(resolved.suite, &resolved.grid, resolved.jobs)?;
    let doc = ReportDocument::new(resolved.suite, resolved.grid, checks, started.elapsed());
    let text = doc.render(resolved.format).map_err(|e| ConfigError(e.to_string()))?;
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(doc.summary.exit_code())
}
