//! `coscos`: integrate cos(cos x), run the random-interval benchmark,
//! check the C₁ error bound and dump sample data as CSV.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use coscos::analysis::{
    worst_case_error, BenchmarkConfig, DEFAULT_SEED, DEFAULT_TOL_REF, DEFAULT_TOL_TIME,
    DEFAULT_TRIALS,
};
use coscos::{
    analytic_bound, constants, definite_integral, run_benchmark, sample_functions, Interval,
    MethodKind,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(coscos::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl From<coscos::Error> for CliError {
    fn from(e: coscos::Error) -> Self {
        match e {
            coscos::Error::ConvergenceFailure { .. } => CliError::Numeric(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) | CliError::Csv(_) => 4,
        }
    }
}

/// A `lo:hi` pair on the command line.
#[derive(Debug, Clone, Copy)]
struct BoundsArg(Interval);

impl FromStr for BoundsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected `lo:hi`, got `{s}`"))?;
        let lo: f64 = lo
            .trim()
            .parse()
            .map_err(|e| format!("bad lower bound: {e}"))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .map_err(|e| format!("bad upper bound: {e}"))?;
        Interval::new(lo, hi)
            .map(BoundsArg)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "coscos",
    version,
    about = "Closed-form integrals of cos(cos x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Definite integral of cos(cos x) over [lo, hi].
    #[command(allow_negative_numbers = true)]
    Integrate {
        lo: f64,
        hi: f64,
        /// c1, c2, simpson or oracle.
        #[arg(long, default_value = "c1")]
        method: MethodKind,
        /// Quadrature tolerance (ignored by c1/c2).
        #[arg(long, default_value_t = DEFAULT_TOL_REF)]
        tol: f64,
    },
    /// Random-interval benchmark of C1/C2 against the quadrature reference.
    Benchmark {
        /// Comma-separated `lo:hi` pairs; defaults to the six symmetric reference bounds.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        bounds: Vec<BoundsArg>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Oracle tolerance for the error columns.
        #[arg(long, default_value_t = DEFAULT_TOL_REF)]
        tol: f64,
        /// Tolerance of the timed adaptive Simpson reference.
        #[arg(long, default_value_t = DEFAULT_TOL_TIME)]
        tol_time: f64,
        /// Output CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analytic C1 error bound and the measured worst case.
    Bound {
        #[arg(long, default_value_t = DEFAULT_TOL_REF)]
        tol: f64,
    },
    /// Tabulate the integrand, derivative and approximations on a grid.
    #[command(allow_negative_numbers = true)]
    Sample {
        lo: f64,
        hi: f64,
        #[arg(long, default_value_t = 1301)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the derived constants.
    Constants,
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let c = constants();
    match cli.command {
        Command::Integrate {
            lo,
            hi,
            method,
            tol,
        } => {
            check_tol(tol)?;
            let iv = Interval::new(lo, hi)?;
            let r = definite_integral(iv, method, c, tol)?;
            println!("method: {method}");
            println!("value: {}", r.value);
            if let Some(err) = r.error_estimate {
                println!("error_estimate: {err}");
                println!("evaluations: {}", r.evaluations);
            }
        }
        Command::Benchmark {
            bounds,
            trials,
            seed,
            tol,
            tol_time,
            out,
        } => {
            check_tol(tol)?;
            check_tol(tol_time)?;
            let mut config = BenchmarkConfig {
                n_trials: trials,
                seed,
                tol_ref: tol,
                tol_time,
                ..BenchmarkConfig::default()
            };
            if !bounds.is_empty() {
                config.bounds = bounds.into_iter().map(|b| b.0).collect();
            }
            let rows = run_benchmark(&config, c)?;
            output::emit(&output::benchmark_csv(&rows)?, out.as_deref())?;
        }
        Command::Bound { tol } => {
            check_tol(tol)?;
            let hs: Vec<i64> = (-4..=4).collect();
            let analytic = analytic_bound(c);
            let measured = worst_case_error(&hs, c, tol)?;
            let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
            println!("analytic_bound: {analytic}");
            println!("measured_worst_case: {measured}");
            println!("measured <= analytic: {}", verdict(measured <= analytic));
            println!("analytic <= 9.6e-4: {}", verdict(analytic <= 9.6e-4));
        }
        Command::Sample { lo, hi, n, out } => {
            let rows = sample_functions(lo, hi, n, c)?;
            output::emit(&output::sample_csv(&rows)?, out.as_deref())?;
        }
        Command::Constants => {
            println!("sin1: {}", c.sin1);
            println!("cos1: {}", c.cos1);
            println!("j0_1: {}", c.j0_1);
            println!("k_a: {}", c.k_a);
            println!("k_b: {}", c.k_b);
            println!("k: {}", c.k);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
