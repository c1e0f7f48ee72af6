//! `csm`: CSM classes of Schubert cells and varieties from the command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or input error,
//! 3 verification failure.

mod render;

use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use schubert_csm::csm::{self, CsmError, Method};
use schubert_csm::partition::Partition;
use schubert_csm::verify::{self, Check, ScanOptions, Universe, VerificationReport, VerifyError};
use schubert_csm::{Integer, Table};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "csm", version, about = "Exact CSM classes of Schubert cells and varieties in Grassmannians")]
struct Cli {
    /// Dump intermediate polynomials to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full table of gamma(alpha, beta) for the cell of ALPHA.
    Cell {
        alpha: Partition,
        #[arg(long, default_value = "h")]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A single coefficient gamma(ALPHA, BETA).
    Gamma {
        alpha: Partition,
        beta: Partition,
        #[arg(long, default_value = "det")]
        method: Method,
        /// Evaluate with every applicable method; exit 3 if they disagree.
        #[arg(long)]
        all_methods: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSM class of the closed Schubert variety of ALPHA.
    Variety {
        alpha: Partition,
        #[arg(long, default_value = "h")]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification check over a family of diagrams.
    Scan {
        /// cross, positivity, duality, adjunction, euler, normalization,
        /// dstable, onerow, antisym, or all.
        check: ScanTarget,
        /// All diagrams within N columns and D rows, written NxD.
        #[arg(long)]
        rect: Option<Universe>,
        /// Scan these diagrams instead of a rectangle (repeatable).
        #[arg(long = "diagram", conflicts_with = "rect")]
        diagrams: Vec<Partition>,
        #[arg(long)]
        min_size: Option<u64>,
        #[arg(long)]
        max_size: Option<u64>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Per-diagram wall-clock budget in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Include the generating-function method in the cross check.
        #[arg(long)]
        genfun: bool,
        /// Include elapsed times in the report.
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// One-row part of the total Chern class of a Grassmannian.
    ChernGrass {
        /// Number of columns (dim V = n + d).
        #[arg(long)]
        n: i64,
        /// Dimension of the subspaces.
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug)]
enum ScanTarget {
    One(Check),
    All,
}

impl FromStr for ScanTarget {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(ScanTarget::All)
        } else {
            s.parse().map(ScanTarget::One)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Outcome classes mapped onto exit codes.
enum Failure {
    Input(String),
    Internal(String),
    Verification,
}

impl From<CsmError> for Failure {
    fn from(e: CsmError) -> Self {
        match e {
            CsmError::NotContained { .. } | CsmError::TooManyRows(_) | CsmError::InvalidArgument(_) | CsmError::UnknownMethod(_) => {
                Failure::Input(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Csm(c) => c.into(),
            VerifyError::BadRect(_) | VerifyError::UnknownCheck(_) | VerifyError::InvalidArgument(_) => {
                Failure::Input(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(3),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Cell { alpha, method, format } => {
            if !method.applies_to(&alpha) {
                return Err(Failure::Input(format!("method {method} does not apply to {alpha}")));
            }
            if cli.verbose {
                dump_polynomials(&alpha, method)?;
            }
            let table: Table = csm::cell_table(&alpha, method)?;
            print!("{}", render::table(&table, format));
            Ok(())
        }
        Command::Gamma { alpha, beta, method, all_methods, format } => {
            if !alpha.contains(&beta) {
                return Err(Failure::Input(format!("{beta} is not contained in {alpha}")));
            }
            if cli.verbose {
                dump_polynomials(&alpha, method)?;
            }
            let methods: Vec<Method> = if all_methods {
                Method::ALL.into_iter().filter(|m| m.applies_to(&alpha)).collect()
            } else {
                vec![method]
            };
            let mut values = Vec::new();
            for m in methods {
                values.push((m, csm::gamma::<Integer>(&alpha, &beta, m)?));
            }
            print!("{}", render::gamma(&alpha, &beta, &values, all_methods, format));
            if values.windows(2).any(|w| w[0].1 != w[1].1) {
                eprintln!("methods disagree");
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Variety { alpha, method, format } => {
            if !method.applies_to(&alpha) {
                return Err(Failure::Input(format!("method {method} does not apply to {alpha}")));
            }
            let table: Table = csm::csm_variety(&alpha, method)?;
            print!("{}", render::table(&table, format));
            Ok(())
        }
        Command::Scan {
            check,
            rect,
            diagrams,
            min_size,
            max_size,
            jobs,
            budget_ms,
            genfun,
            timings,
            format,
        } => {
            let universe = match rect {
                Some(u) => u.with_size_bounds(min_size, max_size),
                None if !diagrams.is_empty() => Universe::List(diagrams),
                None => return Err(Failure::Input("give --rect NxD or at least one --diagram".into())),
            };
            if jobs == Some(0) {
                return Err(Failure::Input("--jobs must be positive".into()));
            }
            let opts = ScanOptions { jobs, budget: budget_ms.map(Duration::from_millis), genfun };
            let reports = match check {
                ScanTarget::One(c) => vec![verify::run_check(c, &universe, &opts)?],
                ScanTarget::All => verify::run_all(&universe, &opts)?,
            };
            for r in &reports {
                eprintln!("{}: {} tested in {} ms", r.check, r.tested, r.elapsed.as_millis());
            }
            print!("{}", render_reports(&reports, matches!(check, ScanTarget::All), timings, format));
            if reports.iter().all(VerificationReport::passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::ChernGrass { n, d, format } => {
            if n < 1 || d < 1 {
                return Err(Failure::Input(format!("n and d must be positive (got n={n}, d={d})")));
            }
            let (n, d) = (
                u32::try_from(n).map_err(|_| Failure::Input("n too large".into()))?,
                u32::try_from(d).map_err(|_| Failure::Input("d too large".into()))?,
            );
            let poly = csm::chern_grass_onerow::<Integer>(n, d)?;
            print!("{}", render::chern_grass(n, d, &poly, format));
            Ok(())
        }
    }
}

fn render_reports(reports: &[VerificationReport], many: bool, timings: bool, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => reports.iter().map(|r| r.render_text(timings)).collect::<Vec<_>>().join("\n"),
        ReportFormat::Json => {
            let values: Vec<_> = reports.iter().map(|r| r.to_json_value(timings)).collect();
            let v = if many { serde_json::Value::Array(values) } else { values.into_iter().next().expect("one report") };
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    }
}

fn dump_polynomials(alpha: &Partition, method: Method) -> Result<(), Failure> {
    let d = alpha.rows();
    match method {
        Method::H => {
            let p = csm::h_polynomial::<Integer>(alpha, d, false)?;
            eprintln!("h-polynomial for {alpha} (d = {d}):\n  {p}");
        }
        Method::Rat => {
            let p = csm::rat_series::<Integer>(alpha, d)?;
            eprintln!("truncated rational series for {alpha} (d = {d}):\n  {p}");
        }
        _ => eprintln!("no intermediate polynomial for method {method}"),
    }
    Ok(())
}
