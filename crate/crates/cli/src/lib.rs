//! Command-line front end: `estimate`, `symmetry` and `bounds`.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ritzsym::{Error as CoreError, ErrorClass};

mod bounds;
mod estimate;
mod inputs;
mod symmetry;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ritzsym", version, about = "Lanczos quadrature and Ritz value symmetry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate u^T f(A) u with an m-step Lanczos quadrature.
    Estimate(EstimateArgs),
    /// Check spectrum symmetry, the palindrome condition and Ritz value symmetry.
    Symmetry(SymmetryArgs),
    /// Iteration bounds and the symmetric/asymmetric gap over condition numbers.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Matrix Market file or `case:N` (N = 1..4).
    #[arg(long)]
    pub matrix: String,
    /// Vector file, `ones`, or `case` (the case's own start vector).
    #[arg(long)]
    pub vector: Option<String>,
    /// Matrix function: exp, log, inv, sqrt, power:p, scaled-exp:b, poly:c0,c1,...
    #[arg(long = "f")]
    pub function: String,
    /// Number of Lanczos steps.
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value = "full")]
    pub reorth: String,
    /// Also compute the dense eigendecomposition reference value.
    #[arg(long)]
    pub oracle: bool,
    /// Local nd3k Matrix Market file, for `case:4`.
    #[arg(long)]
    pub nd3k: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (output is then no longer reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct SymmetryArgs {
    #[arg(long, conflicts_with_all = ["matrix", "vector"])]
    pub case: Option<u8>,
    #[arg(long, requires = "vector")]
    pub matrix: Option<PathBuf>,
    /// Vector file or `ones`.
    #[arg(long, requires = "matrix")]
    pub vector: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub m: usize,
    #[arg(long, default_value_t = ritzsym::symmetry::DEFAULT_SYMMETRY_TOL)]
    pub tol: f64,
    #[arg(long, default_value = "full")]
    pub reorth: String,
    /// Local nd3k Matrix Market file, for `--case 4`.
    #[arg(long)]
    pub nd3k: Option<PathBuf>,
    /// Run the dense eigendecomposition even above the dimension cap.
    #[arg(long)]
    pub allow_dense_cap_override: bool,
    /// Dense eigensolver: jacobi or householder-ql.
    #[arg(long, default_value = "jacobi")]
    pub dense_solver: String,
    /// Directory for measure.csv, ritz.csv and report.json.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Comma-separated condition numbers, or `paper` for the reference grid.
    #[arg(long)]
    pub kappa_grid: Option<String>,
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
    /// Matrix function for M_rho and the step floors; needs --lambda-min.
    #[arg(long = "f")]
    pub function: Option<String>,
    #[arg(long)]
    pub lambda_min: Option<f64>,
    /// With --lambda-min and no grid, evaluates the single kappa = max/min.
    #[arg(long)]
    pub lambda_max: Option<f64>,
    #[arg(long, default_value_t = ritzsym::bounds::DEFAULT_ELLIPSE_SAMPLES)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) => match e.class() {
                ErrorClass::Usage => EXIT_USAGE,
                ErrorClass::Numeric => EXIT_NUMERIC,
                ErrorClass::Io => EXIT_IO,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs a parsed command and returns what it prints to stdout.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Estimate(args) => estimate::run(&args),
        Command::Symmetry(args) => symmetry::run(&args),
        Command::Bounds(args) => bounds::run(&args),
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("ritzsym")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| usage(e.to_string()))?;
    execute(cli)
}

/// Writes `text` to `out` atomically, or hands it back for stdout.
pub(crate) fn emit(text: String, out: Option<&PathBuf>) -> Result<String, CliError> {
    match out {
        Some(path) => {
            ritzsym::io::write_atomic(path, text.as_bytes())?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
