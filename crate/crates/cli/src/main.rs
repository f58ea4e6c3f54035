use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fanspec_core::eigen::{DEFAULT_CONVERGENCE_TOL, DEFAULT_GROUPING_TOL};
use fanspec_core::verify::DEFAULT_TOL;
use fanspec_core::{ClosedFormCase, Error, Family, MatrixKind};
use serde::Serialize;

mod commands;
mod render;

#[derive(Parser)]
#[command(
    name = "fanspec",
    version,
    about = "Spectra of generalized fan graphs F_{m,n} and their doubled NC construction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[value(alias = "text-table")]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Closed,
    Numeric,
    Both,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Closed => "closed",
            Self::Numeric => "numeric",
            Self::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Edgelist,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues with multiplicities, from the closed form, the solver, or both
    Spectrum {
        family: Family,
        m: usize,
        n: usize,
        /// adjacency, laplacian, distance, transmission, distance-laplacian,
        /// distance-signless-laplacian or generalized-distance:T with 0 < T < 1
        kind: MatrixKind,
        #[arg(value_enum, default_value_t = Mode::Numeric)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_CONVERGENCE_TOL)]
        convergence_tol: f64,
        #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
        grouping_tol: f64,
    },
    /// Recompute the adjacency/Laplacian comparison tables (1 or 2)
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Check every closed form against the solver over a parameter grid
    Verify {
        /// Inclusive, e.g. 2..12 or 5
        #[arg(value_parser = parse_range)]
        m_range: RangeInclusive<usize>,
        #[arg(value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// "all" or a comma list of fan-laplacian, nc-laplacian,
        /// fan-distance-laplacian, nc-distance-laplacian
        #[arg(default_value = "all", value_parser = parse_kinds)]
        kinds: Kinds,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print a graph matrix
    Matrix {
        family: Family,
        m: usize,
        n: usize,
        kind: MatrixKind,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Write the graph as an edge list or DOT
    Export {
        family: Family,
        m: usize,
        n: usize,
        #[arg(value_enum)]
        format: ExportFormat,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Equitable quotient matrix, its eigenvalues, and containment in the full spectrum
    Quotient {
        family: Family,
        m: usize,
        n: usize,
        kind: MatrixKind,
        /// Blocks separated by ';', vertices by ',' (default: the family's canonical partition)
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Clone, Debug)]
struct Kinds(Vec<ClosedFormCase>);

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected a range like 2..12 or a single value, got '{s}'");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn parse_kinds(s: &str) -> Result<Kinds, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Kinds(ClosedFormCase::ALL.to_vec()));
    }
    s.split(',')
        .map(|k| {
            k.trim()
                .parse::<ClosedFormCase>()
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()
        .map(Kinds)
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Unsupported(String),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Core(
                Error::InvalidParameter(_) | Error::InvalidEdge { .. } | Error::Parse(_),
            ) => 3,
            Self::Core(Error::Disconnected) => 4,
            Self::Unsupported(_) => 5,
            Self::Core(
                Error::NoConvergence { .. }
                | Error::CardinalityMismatch { .. }
                | Error::MissingZeroEigenvalue { .. }
                | Error::InvalidMatrix(_),
            ) => 6,
            Self::Io(..) => 7,
            Self::Core(Error::InvalidPartition(_)) => 8,
            Self::Core(Error::NotEquitable { .. }) => 9,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Core(e) => e.fmt(f),
            Self::Unsupported(msg) => write!(f, "unsupported combination: {msg}"),
            Self::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let ok = |s: String| Ok((s, true));
    match cli.command {
        Command::Spectrum {
            family,
            m,
            n,
            kind,
            mode,
            format,
            convergence_tol,
            grouping_tol,
        } => {
            let args = commands::SpectrumArgs {
                family,
                m,
                n,
                kind,
                mode,
                convergence_tol,
                grouping_tol,
            };
            ok(commands::spectrum(&args, format)?)
        }
        Command::Tables { which, format } => ok(commands::tables(which, format)?),
        Command::Verify {
            m_range,
            n_range,
            kinds,
            tol,
            format,
        } => commands::verify(m_range, n_range, &kinds.0, tol, format),
        Command::Matrix {
            family,
            m,
            n,
            kind,
            format,
        } => ok(commands::matrix(family, m, n, kind, format)?),
        Command::Export {
            family,
            m,
            n,
            format,
            output,
        } => {
            let text = commands::export(family, m, n, format)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| CliError::Io(path, e))?;
                    ok(String::new())
                }
                None => ok(text),
            }
        }
        Command::Quotient {
            family,
            m,
            n,
            kind,
            partition,
            tol,
            format,
        } => ok(commands::quotient(
            family,
            m,
            n,
            kind,
            partition.as_deref(),
            tol,
            format,
        )?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default();
            eprintln!(
                "fanspec: {}",
                first.strip_prefix("error: ").unwrap_or(first)
            );
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok((text, pass)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("fanspec: stdout: {e}");
                    return ExitCode::from(7);
                }
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("fanspec: verification failed");
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("fanspec: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
