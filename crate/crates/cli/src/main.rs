//! `dmm`: separation bounds, root isolation and bound validation for
//! polynomial systems given as `.sys` files.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Parser)]
#[command(name = "dmm", version, about = "Aggregate root separation bounds and bivariate root isolation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    ZeroDim,
    Excess,
    Dense,
    Mixedvol,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Separation, magnitude and product bounds for a system file.
    Bounds {
        system: PathBuf,
        /// Number of root pairs in the product bounds.
        #[arg(long, default_value_t = 1)]
        ell: u64,
        #[arg(long, value_enum, default_value_t = Mode::ZeroDim)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Certified isolating boxes for the real roots of a bivariate system.
    Isolate {
        system: PathBuf,
        /// Search box as `x_lo,x_hi,y_lo,y_hi` with rational entries.
        #[arg(long = "box", value_name = "XLO,XHI,YLO,YHI")]
        region: Option<String>,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Positive-minimum bound sizes at n = 2 next to the published values.
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Eigenvalue and eigenvector bounds for an n x n integer matrix.
    Eigen {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        tau: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Subdivision step bound and, for bivariate systems, the measured count.
    Steps { system: PathBuf },
    /// Checks every applicable bound against oracle-computed roots.
    Validate {
        system: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Real roots of a bivariate system from the projection oracle.
    Oracle {
        system: PathBuf,
        /// Refine every coordinate interval to width at most 2^-bits.
        #[arg(long, default_value_t = 20)]
        bits: i64,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Bounds { system, ell, mode, format } => commands::bounds(&system, ell, mode, format),
        Command::Isolate { system, region, max_depth } => commands::isolate(&system, region.as_deref(), max_depth),
        Command::Table1 { format } => commands::table1(format),
        Command::Eigen { n, tau, format } => commands::eigen(n, tau, format),
        Command::Steps { system } => commands::steps(&system),
        Command::Validate { system, format } => commands::validate(&system, format),
        Command::Oracle { system, bits } => commands::oracle(&system, bits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::ValidationFailed(out)) => {
            print!("{out}");
            ExitCode::from(4)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
