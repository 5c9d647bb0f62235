//! `sngon`: one subcommand per invocation, one JSON document on standard
//! output, a one-line summary on standard error.
//!
//! Exit codes: 0 success, 1 negative answer (infeasible, not certified,
//! failed verification), 2 numerical failure, 3 invalid request.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spherical_ngon::wronski::SolverConfig;
use thiserror::Error;

mod commands;
mod documents;

pub use documents::SCHEMA_VERSION;

#[derive(Parser, Debug)]
#[command(
    name = "sngon",
    version,
    about = "Spherical polygons with all but two angles integer multiples of pi"
)]
pub struct Cli {
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a signature is realizable and list its degree data.
    Feasible(SignatureArgs),
    /// Exact counts of diagrams, tableaux and metrics.
    Count(CountArgs),
    /// Construct every developing map with prescribed real corners.
    Solve(SolveArgs),
    /// Re-check the solutions stored in a `solve` document.
    Verify(InputArgs),
    /// Monodromy of the Fuchsian equation of each stored solution.
    Monodromy(InputArgs),
    /// List chord diagrams, odd diagrams or tableaux.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug)]
pub struct SignatureArgs {
    /// Angle at 0 in units of pi, as `3/2` or `1.5`.
    #[arg(long)]
    pub alpha0: String,
    /// Integer corner angles in units of pi, comma-separated.
    #[arg(long)]
    pub interior: String,
    /// Angle at infinity in units of pi.
    #[arg(long)]
    pub alphainf: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CountArgs {
    /// Symmetric metrics from odd diagrams: `m0,m_1,...,m_k,mInf`.
    #[arg(long)]
    pub odd: Option<String>,
    /// Kostka number of a multiplicity vector.
    #[arg(long)]
    pub kostka: Option<String>,
    /// Catalan number `C_d`.
    #[arg(long)]
    pub catalan: Option<u32>,
    /// Central binomial `binom(m, floor(m/2))`.
    #[arg(long)]
    pub binomial: Option<u32>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Positive increasing real corners `a_1,...,a_k`.
    #[arg(long)]
    pub corners: String,
    /// Integer angle at each corner, in units of pi.
    #[arg(long)]
    pub mult: String,
    #[arg(long)]
    pub alpha0: String,
    #[arg(long)]
    pub alphainf: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Which degree solution to use when several exist.
    #[arg(long, default_value_t = 0)]
    pub solution: usize,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// A document written by `solve`.
    #[arg(long)]
    pub input: PathBuf,
    /// Only this solution of the document.
    #[arg(long)]
    pub index: Option<usize>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct EnumerateArgs {
    /// Non-crossing chord diagrams for a multiplicity vector.
    #[arg(long)]
    pub diagrams: Option<String>,
    /// Odd diagrams for `m0,m_1,...,m_k,mInf`.
    #[arg(long)]
    pub odd: Option<String>,
    /// Semistandard tableaux of two equal rows.
    #[arg(long)]
    pub tableaux: Option<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 3,
            CliError::Numeric(_) => 2,
        }
    }
}

impl From<spherical_ngon::Error> for CliError {
    fn from(e: spherical_ngon::Error) -> Self {
        if e.is_validation() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}

/// What a command produced before it is turned into an exit code.
pub(crate) struct Report {
    pub document: String,
    pub summary: String,
    /// A mathematically negative answer (exit 1).
    pub negative: bool,
    /// A numerical shortfall that still produced a document (exit 2).
    pub numeric_failure: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Tolerances, overridable through `SNGON_RESIDUAL_TOL`, `SNGON_REALNESS_TOL`,
/// `SNGON_DEDUP_TOL` and `SNGON_MONODROMY_TOL`.
#[derive(Clone, Debug)]
pub(crate) struct Settings {
    pub solver: SolverConfig,
    pub monodromy_tol: f64,
}

impl Settings {
    fn from_env(env: &dyn Fn(&str) -> Option<String>) -> Result<Self, CliError> {
        let read = |name: &str, default: f64| -> Result<f64, CliError> {
            match env(name) {
                None => Ok(default),
                Some(v) => match v.trim().parse::<f64>() {
                    Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
                    _ => Err(CliError::Validation(format!(
                        "{name} must be a positive number, got {v:?}"
                    ))),
                },
            }
        };
        let mut solver = SolverConfig::default();
        solver.residual_tol = read("SNGON_RESIDUAL_TOL", solver.residual_tol)?;
        solver.realness_tol = read("SNGON_REALNESS_TOL", solver.realness_tol)?;
        solver.dedup_tol = read("SNGON_DEDUP_TOL", solver.dedup_tol)?;
        Ok(Settings {
            solver,
            monodromy_tol: read("SNGON_MONODROMY_TOL", 1e-6)?,
        })
    }
}

/// Run with tolerance overrides read from the process environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, &|name| std::env::var(name).ok())
}

pub fn run_with_env<I, T>(args: I, env: &dyn Fn(&str) -> Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 3,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = Settings::from_env(env).and_then(|settings| dispatch(&cli, &settings));
    match result {
        Ok(report) => {
            let mut stderr = format!("{}\n", report.summary);
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &report.document) {
                    stderr.push_str(&format!("cannot write {}: {e}\n", path.display()));
                    return Outcome {
                        code: 3,
                        stdout: report.document,
                        stderr,
                    };
                }
            }
            let code = if report.numeric_failure {
                2
            } else if report.negative {
                1
            } else {
                0
            };
            Outcome {
                code,
                stdout: report.document,
                stderr,
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli, settings: &Settings) -> Result<Report, CliError> {
    match &cli.command {
        Command::Feasible(a) => commands::feasible(a),
        Command::Count(a) => commands::count(a),
        Command::Solve(a) => commands::solve(a, settings),
        Command::Verify(a) => commands::verify(a, settings),
        Command::Monodromy(a) => commands::monodromy(a, settings),
        Command::Enumerate(a) => commands::enumerate(a),
    }
}
