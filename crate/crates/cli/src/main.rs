//! `chebfrac` — exact Chebyshev-polynomial arithmetic, quadratic-surd
//! convergents with error certificates, identity verification sweeps,
//! triangle-derived integer sequences, and a route-comparison benchmark.
//!
//! Exit codes: 0 success, 1 domain error / failed verification / mismatch,
//! 2 usage error.

mod commands;
mod format;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{bench, cheb, seq, surd, verify};
use format::OutputFormat;

#[derive(Parser)]
#[command(
    name = "chebfrac",
    version,
    about = "Exact arithmetic for Chebyshev approximants of quadratic surds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of T_n or U_n, low degree first.
    Cheb {
        /// Which family: T (first kind) or U (second kind).
        #[arg(long)]
        kind: String,
        /// Degree.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Evaluate the approximant S_{n,d}(x) exactly, with its gap certificate.
    Surd {
        /// Evaluation point, an integer or fraction like 5/2; |x| > 1.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Approximant depth n >= 0.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Approximant order d >= 1.
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// How to build the value: the defining series, the closed-form
        /// fraction, or the continued-fraction route (integer x >= 2 only).
        #[arg(long, default_value = "closed")]
        method: surd::Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Run a verification sweep; exit 0 only if no counterexample exists.
    Verify {
        #[arg(long)]
        suite: verify::Suite,
        /// Bound for n-type parameters (suite-specific default).
        #[arg(long)]
        max_n: Option<i64>,
        /// Bound for the Vajda shift parameters i and j.
        #[arg(long)]
        max_ij: Option<i64>,
        /// Bound for d-type parameters.
        #[arg(long)]
        max_d: Option<i64>,
        /// Bound for integer evaluation points x.
        #[arg(long)]
        max_x: Option<i64>,
        /// Matrix size for the lu suite.
        #[arg(long)]
        size: Option<usize>,
        /// Worker threads for sweeps.
        #[arg(long)]
        jobs: Option<usize>,
        /// Machine-readable summaries and counterexamples (JSON lines).
        #[arg(long)]
        json_lines: bool,
    },
    /// Print a triangle-derived integer sequence, optionally diffing it
    /// against a local b-file.
    Seq {
        /// One of: row_sums, central, weight_k_plus_1, weight_k_minus_1,
        /// weight_2k_plus_1.
        #[arg(long)]
        name: String,
        /// Number of terms, starting at n = 0.
        #[arg(long, allow_negative_numbers = true)]
        count: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
        /// Path to a b-file (`n value` per line) to compare against.
        #[arg(long)]
        compare: Option<std::path::PathBuf>,
        /// Index offset applied to the b-file side of the comparison.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
    },
    /// Time competing evaluation routes; values are asserted equal before
    /// any timing is reported (CSV on stdout).
    Bench {
        #[arg(long)]
        task: bench::Task,
        /// Index, plain (1000000) or power notation (10^6).
        #[arg(long)]
        n: String,
        /// Approximant order for the series-vs-closed task.
        #[arg(long, default_value_t = 1)]
        d: i64,
        /// Integer evaluation point.
        #[arg(long, default_value_t = 3)]
        x: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cheb { kind, n, format } => cheb::run(&kind, n, format),
        Command::Surd {
            x,
            n,
            d,
            method,
            format,
        } => surd::run(&x, n, d, method, format),
        Command::Verify {
            suite,
            max_n,
            max_ij,
            max_d,
            max_x,
            size,
            jobs,
            json_lines,
        } => verify::run(verify::Options {
            suite,
            max_n,
            max_ij,
            max_d,
            max_x,
            size,
            jobs,
            json_lines,
        }),
        Command::Seq {
            name,
            count,
            format,
            compare,
            shift,
        } => seq::run(&name, count, format, compare.as_deref(), shift),
        Command::Bench { task, n, d, x } => bench::run(task, &n, d, x),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
