//! Command-line front end: spec ingestion, the analysis pipeline, canonical
//! reports and golden-suite regression.

pub mod osc;
pub mod report;
pub mod spec;
pub mod suite;
mod table;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lgcy_core::hodge::{DEFAULT_SEED, DEFAULT_TRIPLES};
use lgcy_core::ideal::DEFAULT_BUDGET;
use lgcy_core::oscillatory::{DEFAULT_NODES, DEFAULT_RADIUS, QUADRATURE_TOL};
use lgcy_core::OrderKind;
use serde::Serialize;
use thiserror::Error;

pub use osc::{oscillatory_report, OscillatoryReport};
pub use report::{analyze, AnalysisReport, Check, SCHEMA};
pub use spec::{parse_spec, SingularitySpec};
pub use suite::{verify_suite, SuiteSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("spec line {line}: {message}")]
    Spec { line: usize, message: String },
    #[error("invalid spec: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] lgcy_core::Error),
}

impl CliError {
    pub(crate) fn spec(line: usize, message: impl Into<String>) -> Self {
        CliError::Spec {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        use lgcy_core::Error as E;
        match self {
            CliError::Io(_) | CliError::Spec { .. } | CliError::Validation(_) => EXIT_INVALID,
            CliError::Core(e) => match e {
                E::DegenerateSingularity | E::DegenerateMember(_) | E::InfiniteQuotient => EXIT_DEGENERATE,
                E::BudgetExceeded { .. } => EXIT_BUDGET,
                E::Internal(_) | E::ProportionalityViolation => EXIT_CHECK_FAILED,
                _ => EXIT_INVALID,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub order: OrderKind,
    pub budget: usize,
    pub seed: u64,
    pub triples: usize,
    pub nodes: usize,
    pub radius: f64,
    pub tol: f64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            order: OrderKind::GrevLex,
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            triples: DEFAULT_TRIPLES,
            nodes: DEFAULT_NODES,
            radius: DEFAULT_RADIUS,
            tol: QUADRATURE_TOL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "lgcy", version, about = "Exact Landau-Ginzburg / Calabi-Yau correspondence checks")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized Frobenius triples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Reduction budget for Buchberger's algorithm.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Monomial order: grevlex, grlex or lex.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: OrderKind,
    /// Gauss-Legendre nodes per ray.
    #[arg(long, global = true, default_value_t = DEFAULT_NODES)]
    pub nodes: usize,
    /// Relative tolerance for quadrature against closed forms.
    #[arg(long, global = true, default_value_t = QUADRATURE_TOL)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline on a spec file.
    Analyze {
        spec: PathBuf,
        /// Include the numeric Gamma-factor section.
        #[arg(long)]
        oscillatory: bool,
    },
    /// Compare thimble quadrature with the closed form for f = x^m.
    Oscillatory {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
    },
    /// Recompute every spec in a directory and compare against goldens.
    VerifySuite {
        dir: PathBuf,
        /// Rewrite the golden reports instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            order: self.order,
            budget: self.budget,
            seed: self.seed,
            nodes: self.nodes,
            tol: self.tol,
            ..Options::default()
        }
    }
}

/// Canonical serialization: pretty JSON in declaration order plus a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn analyze_file(path: &Path, opts: &Options, oscillatory: bool) -> Result<AnalysisReport, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let spec = parse_spec(&text)?;
    analyze(&spec, opts, oscillatory)
}

fn emit(cli: &Cli, json: String, table: String) -> Result<(), CliError> {
    let text = match cli.format {
        Format::Json => json,
        Format::Table => table,
    };
    match &cli.out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn run_inner(cli: &Cli) -> Result<i32, CliError> {
    let opts = cli.options();
    match &cli.command {
        Command::Analyze { spec, oscillatory } => {
            let r = analyze_file(spec, &opts, *oscillatory)?;
            emit(cli, to_json(&r), table::analysis(&r))?;
            Ok(verdict(r.pass))
        }
        Command::Oscillatory { m, k, j } => {
            let r = oscillatory_report(*m, *k, *j, &opts)?;
            emit(cli, to_json(&r), table::oscillatory(&r))?;
            Ok(verdict(r.pass))
        }
        Command::VerifySuite { dir, bless } => {
            let s = verify_suite(dir, &opts, *bless)?;
            emit(cli, to_json(&s), table::suite(&s))?;
            Ok(verdict(s.pass))
        }
    }
}
