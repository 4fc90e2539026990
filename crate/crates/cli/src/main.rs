//! `hydrospec`: batch driver for the precision/resolution experiments.

mod commands;
mod plotdata;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hydrospec::chebtau::{FlowProfile, Method};

#[derive(Parser, Debug)]
#[command(name = "hydrospec", version, about = "Arbitrary-precision Orr-Sommerfeld spectra and convergence studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the 7x7 Godunov matrix at several precisions.
    Godunov(GodunovArgs),
    /// Assemble and solve one Orr-Sommerfeld tau system.
    Solve(SolveArgs),
    /// Convergence sweep over N and P against a reference run.
    Sweep(SweepArgs),
    /// Compare the D2 and D4 formulations against a reference spectrum.
    #[command(name = "compare-d2d4")]
    CompareD2D4(CompareArgs),
    /// Minimal (N, P) per accuracy level from a convergence CSV.
    Thresholds(ThresholdArgs),
}

#[derive(Args, Debug)]
pub struct Common {
    /// Output directory (created if missing).
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Also write per-figure CSV files for plotting.
    #[arg(long)]
    emit_plotdata: bool,
}

#[derive(Args, Debug)]
pub struct GodunovArgs {
    /// Sign of the last diagonal entry, 1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
    /// Comma-separated significand widths.
    #[arg(long, value_delimiter = ',', default_value = "60,80,100,120,140,160,180,200")]
    bits: Vec<u32>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
pub struct Problem {
    #[arg(long, default_value = "poiseuille")]
    flow: FlowProfile,
    /// Reynolds number, decimal or scientific notation (parsed exactly).
    #[arg(long)]
    re: String,
    /// Streamwise wavenumber.
    #[arg(long)]
    a: Option<String>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    problem: Problem,
    #[arg(long, default_value = "d2")]
    method: Method,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 53)]
    bits: u32,
    /// Also write the unfiltered finite spectrum.
    #[arg(long)]
    raw: bool,
    /// Spectrum cache directory.
    #[arg(long, env = "HYDROSPEC_CACHE")]
    cache: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    problem: Problem,
    #[arg(long, default_value = "d2")]
    method: Method,
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    bits_list: Vec<u32>,
    #[arg(long)]
    ref_n: usize,
    #[arg(long)]
    ref_bits: u32,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "HYDROSPEC_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Spectrum cache directory; defaults to `<out>/cache`.
    #[arg(long, env = "HYDROSPEC_CACHE")]
    cache: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    problem: Problem,
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 53)]
    bits: u32,
    /// Reference spectrum file written by `solve`.
    #[arg(long = "ref")]
    reference: PathBuf,
    #[arg(long, env = "HYDROSPEC_CACHE")]
    cache: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
pub struct ThresholdArgs {
    /// Convergence CSV written by `sweep`.
    csv: PathBuf,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Godunov(args) => commands::godunov(&args),
        Command::Solve(args) => commands::solve(&args),
        Command::Sweep(args) => commands::sweep(&args),
        Command::CompareD2D4(args) => commands::compare_d2d4(&args),
        Command::Thresholds(args) => commands::thresholds(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
