use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ncwell", version, about = "Circular well in the non-commutative plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bound-state energies with their commutative counterparts.
    BoundStates(BoundArgs),
    /// Phase shifts over an energy sweep.
    PhaseShifts(SweepArgs),
    /// Total cross sections over an energy sweep.
    CrossSection(CrossArgs),
    /// Differential cross section at one energy.
    Dcs(DcsArgs),
    /// Wavefunction on a square grid.
    Wavefunction(WaveArgs),
    /// Non-commutative vs commutative values with deviations.
    Compare(CompareArgs),
    /// Special-function oracle suites and solver invariants.
    Selftest(OutputArgs),
}

#[derive(Args, Debug, Clone)]
pub struct WellArgs {
    /// Well radius: a number or `sqrtX` for √X.
    #[arg(long)]
    pub radius: Option<String>,
    /// Boundary Fock index N.
    #[arg(long = "capital-n")]
    pub capital_n: Option<u32>,
    #[arg(long)]
    pub theta: Option<f64>,
    /// Exterior level V.
    #[arg(long)]
    pub v: f64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct EnergyArgs {
    /// First energy; defaults to V + offset.
    #[arg(long, allow_hyphen_values = true)]
    pub emin: Option<f64>,
    /// Last energy; defaults to V + 25.
    #[arg(long, allow_hyphen_values = true)]
    pub emax: Option<f64>,
    #[arg(long)]
    pub esteps: Option<usize>,
    /// Distance above V of the default first energy.
    #[arg(long, default_value_t = 0.05)]
    pub offset: f64,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub well: WellArgs,
    /// Orders: `a..b` (inclusive), `a,b,c` or a single value.
    #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    #[command(flatten)]
    pub energy: EnergyArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CrossArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[command(flatten)]
    pub energy: EnergyArgs,
    #[arg(long, default_value_t = 8)]
    pub mmax: u32,
    /// Sum m in [-M, M] with independent phase shifts (exploratory mode).
    #[arg(long)]
    pub symmetric: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct DcsArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[arg(long)]
    pub e: f64,
    #[arg(long, default_value_t = 8)]
    pub mmax: u32,
    #[arg(long = "phi-steps", default_value_t = 360)]
    pub phi_steps: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct WaveArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub m: i32,
    /// Scattering energy above V.
    #[arg(long, conflicts_with = "level", required_unless_present = "level")]
    pub e: Option<f64>,
    /// Bound-state level index instead of a scattering energy.
    #[arg(long)]
    pub level: Option<usize>,
    /// Half-width of the grid; defaults to 1.5 R.
    #[arg(long)]
    pub extent: Option<f64>,
    /// Points per side.
    #[arg(long, default_value_t = 81)]
    pub steps: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    PhaseShift,
    CrossSection,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[arg(long, value_enum, default_value_t = Quantity::PhaseShift)]
    pub quantity: Quantity,
    /// Order for phase shifts.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub m: i32,
    #[arg(long, default_value_t = 8)]
    pub mmax: u32,
    #[command(flatten)]
    pub energy: EnergyArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Parses `sqrt20`, `sqrt(20)`, `√20` or a plain number into `R^2`.
pub fn parse_radius_squared(text: &str) -> Result<f64, String> {
    let t = text.trim();
    let inner =
        t.strip_prefix("sqrt").or_else(|| t.strip_prefix('√')).map(|s| s.trim_start_matches('(').trim_end_matches(')'));
    let value = match inner {
        Some(s) => s.parse::<f64>().map_err(|_| format!("bad radius `{text}`"))?,
        None => {
            let r = t.parse::<f64>().map_err(|_| format!("bad radius `{text}`"))?;
            r * r
        }
    };
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(format!("radius must be positive, got `{text}`"))
    }
}

/// Parses `a..b`, `a..=b`, `a,b,c` or `a`.
pub fn parse_orders(text: &str) -> Result<Vec<i32>, String> {
    let bad = || format!("bad m specification `{text}`");
    if let Some((a, b)) = text.split_once("..") {
        let a: i32 = a.trim().parse().map_err(|_| bad())?;
        let b: i32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    text.split(',').map(|s| s.trim().parse::<i32>().map_err(|_| bad())).collect()
}
