//! `torusasym`: component tables, invariant evaluation, verification suites.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "torusasym",
    version,
    about = "Large-N asymptotics of the Kashaev invariant of torus knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Non-abelian character-variety components, one row each.
    Components {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate ⟨K⟩_N by the asymptotic expansion, by quadrature, or both.
    Invariant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "N")]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Expansion)]
        method: Method,
        /// Angle of the quadrature line, radians.
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
        phi: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Finite-type coefficients a_0..a_{n-max}.
    Series {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// |⟨K⟩_N|/N^{3/2} along N = 2pq(1+2j), j = 0..=jmax.
    Growth {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value_t = 4)]
        jmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long = "N")]
        n: Option<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct KnotArgs {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Significant decimal digits.
    #[arg(long, default_value_t = 50)]
    digits: u32,
    /// Write to FILE instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Tex,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Expansion,
    Quadrature,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Suite {
    Table1,
    MainTheorem,
    ResidueTheorem,
    ChernSimons,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(2)
        }
    }
}
