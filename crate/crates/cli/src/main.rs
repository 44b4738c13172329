//! `hartmann`: spectra, wavefunctions, validation runs and potential samples
//! for the ring-shaped Hartmann potential.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hartmann", version, about = "Supersymmetric solver for the ring-shaped Hartmann potential")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bound-state energies sorted ascending.
    Spectrum(SpectrumArgs),
    /// Radial eigenfunction of one state, symbolic and/or sampled.
    Wavefunction(WavefunctionArgs),
    /// Algebraic identities and finite-difference cross-checks.
    Validate(ValidateArgs),
    /// Samples of V(r, θ) along a ray.
    Potential(PotentialArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Units {
    Internal,
    Epsilon0,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Symbolic,
    Samples,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Algebra,
    Numeric,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, default_value = "json")]
    pub format: Format,
    /// Add a provenance header (tool, version, arguments).
    #[arg(long)]
    pub meta: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Strengths {
    #[arg(long, allow_hyphen_values = true)]
    pub eta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: f64,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub strengths: Strengths,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m_min: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m_max: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub max_excitation: i64,
    #[arg(long, default_value = "internal")]
    pub units: Units,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub strengths: Strengths,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub nu: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub nprime: i64,
    /// Sampling extent in units of a₀ (default 30 N / γ).
    #[arg(long, allow_hyphen_values = true)]
    pub r_max: Option<f64>,
    #[arg(long, default_value_t = 201, allow_hyphen_values = true)]
    pub samples: i64,
    #[arg(long, default_value = "symbolic")]
    pub emit: Emit,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub strengths: Strengths,
    /// Azimuthal numbers to cover (comma list or repeated flag).
    #[arg(long, value_delimiter = ',', default_value = "0", allow_hyphen_values = true)]
    pub m: Vec<i64>,
    #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
    pub max_n: i64,
    #[arg(long, default_value_t = 6000, allow_hyphen_values = true)]
    pub grid_n: i64,
    /// Fixed grid extent in a₀ (default 30 N / γ per level).
    #[arg(long, allow_hyphen_values = true)]
    pub r_max: Option<f64>,
    #[arg(long, default_value = "all")]
    pub suite: SuiteArg,
    /// Corrupt one analytic state so the run must fail.
    #[arg(long)]
    pub inject_error: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub strengths: Strengths,
    #[arg(long, default_value_t = 20.0, allow_hyphen_values = true)]
    pub r_max: f64,
    /// Polar angle in radians.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = 200, allow_hyphen_values = true)]
    pub samples: i64,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(cli.command, argv) {
        Ok(outcome) => {
            print!("{}", outcome.body);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
