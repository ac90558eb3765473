// Copyright 2026 The casimir-screening developers
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Command-line front end: `compute`, `sweep` and `compare`.
//!
//! Exit codes: 0 success, 2 usage or invalid input, 3 numerical failure,
//! 4 I/O failure.

mod format;
mod record;
mod sweep;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::medium::{IonSpecies, UnitSystem};

pub use format::format_g17;
pub use record::{
    compare, compute, CompareReport, Dimensionless, Inputs, OracleDeltas, RunRecord, SiPressures,
};
pub use sweep::{run_sweep, Axis, OutputFormat, Spacing, SweepConfig, SweepSpec, SweepTable};

pub const TOOL_NAME: &str = "casimir";
pub const INTERFACE_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Convergence { .. } => CliError::Numerical(e.to_string()),
            Error::Domain(_) | Error::Validation(_) => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = TOOL_NAME,
    version = concat!(env!("CARGO_PKG_VERSION"), " (interface 1)"),
    about = "Casimir disjoining pressure between ideal conductors with confined ions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the pressure breakdown at one state.
    Compute(ComputeArgs),
    /// Evaluate the pressure breakdown along one axis.
    Sweep(SweepArgs),
    /// Compare the Schwinger and Lifshitz zero modes with the ion-screened total.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    Natural,
    Si,
}

impl From<UnitsArg> for UnitSystem {
    fn from(u: UnitsArg) -> Self {
        match u {
            UnitsArg::Natural => UnitSystem::Natural,
            UnitsArg::Si => UnitSystem::Si,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// Temperature (natural units, or kelvin with --units si).
    #[arg(long)]
    pub temperature: f64,
    /// Gap width (natural units, or metres).
    #[arg(long)]
    pub gap: f64,
    /// Inverse Debye length (natural units, or 1/m).
    #[arg(long, conflicts_with = "species", required_unless_present = "species")]
    pub kappa: Option<f64>,
    /// JSON array of {"charge", "density", "mass"?, "name"?}.
    #[arg(long)]
    pub species: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "natural")]
    pub units: UnitsArg,
    /// Relative tolerance of the Matsubara sum, in (0, 1e-3].
    #[arg(long, default_value_t = crate::pressure::DEFAULT_REL_TOL)]
    pub rel_tol: f64,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Also evaluate the raw momentum integrals and report relative deltas.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct CompareArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Default, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    /// JSON sweep description; explicit flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub axis: Option<Axis>,
    #[arg(long)]
    pub start: Option<f64>,
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub spacing: Option<Spacing>,
    #[arg(long)]
    pub temperature: Option<f64>,
    #[arg(long)]
    pub gap: Option<f64>,
    #[arg(long, conflicts_with = "species")]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub species: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub units: Option<UnitsArg>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub(crate) fn read_species(path: &Path) -> Result<Vec<IonSpecies>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let species: Vec<IonSpecies> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid species file {}: {e}", path.display())))?;
    for (i, s) in species.iter().enumerate() {
        s.validate(i)?;
    }
    Ok(species)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::Io(e.to_string()))
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => {
            let record = compute(&args.state, args.oracle)?;
            let json = serde_json::to_string_pretty(&record)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            write_out(out, &format!("{json}\n"))
        }
        Command::Compare(args) => {
            let report = compare(&args.state)?;
            let text = match args.format {
                TableFormat::Csv => report.to_csv(),
                TableFormat::Json => {
                    let json = serde_json::to_string_pretty(&report)
                        .map_err(|e| CliError::Numerical(e.to_string()))?;
                    format!("{json}\n")
                }
            };
            write_out(out, &text)
        }
        Command::Sweep(args) => {
            let config = SweepConfig::from_args(&args)?;
            let table = run_sweep(&config)?;
            let text = table.render(config.spec.output_format)?;
            match &args.output {
                Some(path) => fs::write(path, text)
                    .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
                None => write_out(out, &text),
            }
        }
    }
}

/// Parses `args`, runs the command against stdout and maps the outcome to
/// an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{TOOL_NAME}: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
