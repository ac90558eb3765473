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

use std::fs;
use std::path::PathBuf;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::record::{timestamp_now, ResolvedState, RunRecord};
use super::{format_g17, read_species, CliError, SweepArgs};
use crate::medium::{IonSpecies, UnitSystem};
use crate::pressure::{DEFAULT_REL_TOL, MAX_REL_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// Gap width `L` at fixed `T` and `κ`.
    Gap,
    /// Inverse Debye length `κ` at fixed `T` and `L`.
    Kappa,
    /// Temperature `T` at fixed `L`; `κ` follows the species when given.
    Temperature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub units: UnitSystem,
    pub rel_tol: f64,
    pub output_format: OutputFormat,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.start.is_finite() && self.stop.is_finite() && self.start > 0.0) {
            return Err(CliError::Usage(format!(
                "sweep bounds must be finite and positive, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.start >= self.stop {
            return Err(CliError::Usage(format!(
                "sweep start {} must be below stop {}",
                self.start, self.stop
            )));
        }
        if self.points < 2 {
            return Err(CliError::Usage(format!(
                "a sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol <= MAX_REL_TOL) {
            return Err(CliError::Usage(format!(
                "rel_tol must lie in (0, 1e-3], got {}",
                self.rel_tol
            )));
        }
        Ok(())
    }

    /// Axis values in increasing order; both end points are hit exactly.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == last {
                    return self.stop;
                }
                let frac = i as f64 / last as f64;
                match self.spacing {
                    Spacing::Linear => self.start + frac * (self.stop - self.start),
                    Spacing::Log => self.start * (self.stop / self.start).powf(frac),
                }
            })
            .collect()
    }
}

/// On-disk form of a sweep description; every field may be overridden by a
/// command-line flag.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    axis: Option<Axis>,
    start: Option<f64>,
    stop: Option<f64>,
    points: Option<usize>,
    spacing: Option<Spacing>,
    units: Option<UnitSystem>,
    rel_tol: Option<f64>,
    format: Option<OutputFormat>,
    temperature: Option<f64>,
    gap: Option<f64>,
    kappa: Option<f64>,
    species: Option<Vec<IonSpecies>>,
    species_file: Option<PathBuf>,
}

/// A validated sweep with the fixed coordinates of the state.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub spec: SweepSpec,
    pub temperature: Option<f64>,
    pub gap: Option<f64>,
    pub kappa: Option<f64>,
    pub species: Option<Vec<IonSpecies>>,
}

fn required<T>(value: Option<T>, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("sweep needs --{name} (flag or config field)")))
}

impl SweepConfig {
    pub fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str::<ConfigFile>(&text).map_err(|e| {
                    CliError::Usage(format!("invalid sweep config {}: {e}", path.display()))
                })?
            }
            None => ConfigFile::default(),
        };

        let species = match (&args.species, args.kappa) {
            (Some(path), _) => Some(read_species(path)?),
            (None, Some(_)) => None,
            (None, None) => match (file.species, &file.species_file) {
                (Some(list), _) => Some(list),
                (None, Some(path)) => Some(read_species(path)?),
                (None, None) => None,
            },
        };
        let kappa = if args.species.is_some() {
            None
        } else {
            args.kappa.or(file.kappa)
        };
        if kappa.is_some() && species.is_some() {
            return Err(CliError::Usage(
                "give either kappa or species, not both".to_owned(),
            ));
        }

        let spec = SweepSpec {
            axis: required(args.axis.or(file.axis), "axis")?,
            start: required(args.start.or(file.start), "start")?,
            stop: required(args.stop.or(file.stop), "stop")?,
            points: required(args.points.or(file.points), "points")?,
            spacing: args.spacing.or(file.spacing).unwrap_or_default(),
            units: args
                .units
                .map(UnitSystem::from)
                .or(file.units)
                .unwrap_or_default(),
            rel_tol: args.rel_tol.or(file.rel_tol).unwrap_or(DEFAULT_REL_TOL),
            output_format: args.format.or(file.format).unwrap_or_default(),
        };
        spec.validate()?;

        let config = SweepConfig {
            temperature: args.temperature.or(file.temperature),
            gap: args.gap.or(file.gap),
            kappa,
            species,
            spec,
        };
        config.check_coordinates()?;
        Ok(config)
    }

    fn check_coordinates(&self) -> Result<(), CliError> {
        let screening = self.kappa.is_some() || self.species.is_some();
        match self.spec.axis {
            Axis::Gap => {
                required(self.temperature, "temperature")?;
                if !screening {
                    return Err(CliError::Usage("sweep needs --kappa or --species".to_owned()));
                }
            }
            Axis::Kappa => {
                required(self.temperature, "temperature")?;
                required(self.gap, "gap")?;
                if self.species.is_some() {
                    return Err(CliError::Usage(
                        "a kappa sweep cannot also take species".to_owned(),
                    ));
                }
            }
            Axis::Temperature => {
                required(self.gap, "gap")?;
                if !screening {
                    return Err(CliError::Usage("sweep needs --kappa or --species".to_owned()));
                }
            }
        }
        Ok(())
    }

    fn resolve(&self, value: f64) -> Result<ResolvedState, CliError> {
        let (mut temperature, mut gap, mut kappa) = (self.temperature, self.gap, self.kappa);
        match self.spec.axis {
            Axis::Gap => gap = Some(value),
            Axis::Kappa => kappa = Some(value),
            Axis::Temperature => temperature = Some(value),
        }
        ResolvedState::new(
            self.spec.units,
            required(temperature, "temperature")?,
            required(gap, "gap")?,
            kappa,
            self.species.as_deref(),
        )
    }
}

/// Evaluated sweep, rows in axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub units: UnitSystem,
    pub axis_values: Vec<f64>,
    pub records: Vec<RunRecord>,
}

/// Evaluates every grid point; points run in parallel, rows stay ordered.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable, CliError> {
    let axis_values = config.spec.grid();
    let timestamp = timestamp_now();
    let records = axis_values
        .par_iter()
        .map(|&v| {
            let resolved = config.resolve(v)?;
            RunRecord::build(&resolved, None, config.spec.rel_tol, timestamp.clone())
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SweepTable {
        units: config.spec.units,
        axis_values,
        records,
    })
}

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let si = self.units == UnitSystem::Si;
        let mut out = String::from("axis_value,pi_ion,pi_em,pi_em_zero,pi_total");
        if si {
            out.push_str(",pi_ion_Pa,pi_em_Pa,pi_total_Pa");
        }
        out.push('\n');
        for (value, record) in self.axis_values.iter().zip(&self.records) {
            let b = &record.breakdown;
            let mut fields = vec![*value, b.pi_ion, b.pi_em, b.pi_em_zero_mode, b.pi_total];
            if let Some(pa) = &record.si {
                fields.extend([pa.pi_ion_pa, pa.pi_em_pa, pa.pi_total_pa]);
            }
            let line: Vec<String> = fields.into_iter().map(format_g17).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Csv => Ok(self.to_csv()),
            OutputFormat::Json => serde_json::to_string_pretty(&self.records)
                .map(|s| s + "\n")
                .map_err(|e| CliError::Numerical(e.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(spacing: Spacing, points: usize) -> SweepSpec {
        SweepSpec {
            axis: Axis::Kappa,
            start: 1e-3,
            stop: 10.0,
            points,
            spacing,
            units: UnitSystem::Natural,
            rel_tol: 1e-10,
            output_format: OutputFormat::Csv,
        }
    }

    #[test]
    fn grids_hit_both_ends() {
        for spacing in [Spacing::Linear, Spacing::Log] {
            let g = spec(spacing, 7).grid();
            assert_eq!(g.len(), 7);
            assert_eq!(g[0], 1e-3);
            assert_eq!(g[6], 10.0);
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
        let g = spec(Spacing::Log, 5).grid();
        approx::assert_relative_eq!(g[2], 0.1, max_relative = 1e-14);
    }

    #[test]
    fn invalid_specs() {
        let mut s = spec(Spacing::Linear, 1);
        assert!(s.validate().is_err());
        s.points = 3;
        s.stop = s.start;
        assert!(s.validate().is_err());
        let mut s = spec(Spacing::Linear, 3);
        s.rel_tol = 0.1;
        assert!(s.validate().is_err());
    }
}
