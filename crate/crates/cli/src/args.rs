use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cha-fisher",
    version,
    about = "Fisher information of a hydrogen-like atom in a hard spherical cavity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one state at one cavity radius.
    Solve(SolveArgs),
    /// Sweep cavity radii and nuclear charges.
    Scan(ScanArgs),
    /// Reproduce a benchmark table.
    Table(TableArgs),
    /// Closed-form measures of the unconfined atom.
    Free(FreeArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
    /// Write u(r) and P(p) of one state as two-column CSV.
    Dump(DumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    #[value(name = "2p")]
    P2,
    #[value(name = "3d")]
    D3,
    #[value(name = "4f")]
    F4,
    #[value(name = "5g")]
    G5,
    #[value(name = "n10m1")]
    N10M1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyLevel {
    Fast,
    Full,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub l: u32,
    /// Magnetic quantum number; commands that sweep `m` take every `0..=l` when absent.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i32>,
    /// Nuclear charge.
    #[arg(long = "Z", default_value_t = 1.0)]
    pub z: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Also write the output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Solver settings as `key = value` lines.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long)]
    pub rc: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long = "rc-list", value_delimiter = ',', required = true, num_args = 1..)]
    pub rc_list: Vec<f64>,
    #[arg(long = "z-list", value_delimiter = ',', num_args = 1..)]
    pub z_list: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub preset: Preset,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FreeArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "verify-level", value_enum, default_value = "fast")]
    pub level: VerifyLevel,
    /// Check this state instead of the built-in 2p/3d set (requires `--l`).
    #[arg(long, requires = "l")]
    pub n: Option<u32>,
    #[arg(long, requires = "n")]
    pub l: Option<u32>,
    #[arg(long = "rc-list", value_delimiter = ',', num_args = 1..)]
    pub rc_list: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long)]
    pub rc: f64,
    /// Directory receiving `radial.csv` and `momentum.csv`.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub config: Option<PathBuf>,
}
