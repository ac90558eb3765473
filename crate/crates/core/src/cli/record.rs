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


use serde::{Deserialize, Serialize};

use super::{format_g17, read_species, CliError, StateArgs, INTERFACE_VERSION, TOOL_NAME};
use crate::medium::{
    classicality_check, debye_kappa, pressure_to_si, to_natural, ClassicalityReport, IonSpecies,
    SystemState, UnitSystem,
};
use crate::oracle::{pi_em_raw_auto, pi_ion_raw, pi_total_raw};
use crate::pressure::{pi_em_zero_mode, pi_ion, pi_total, PressureBreakdown, ZeroModeConvention};

/// Physical inputs resolved into a kernel state.
#[derive(Debug, Clone)]
pub(crate) struct ResolvedState {
    pub state: SystemState,
    pub units: UnitSystem,
    pub temperature: f64,
    pub gap: f64,
    pub kappa: f64,
}

impl ResolvedState {
    pub fn new(
        units: UnitSystem,
        temperature: f64,
        gap: f64,
        kappa: Option<f64>,
        species: Option<&[IonSpecies]>,
    ) -> Result<Self, CliError> {
        let kappa = match (kappa, species) {
            (Some(k), _) => k,
            (None, Some(species)) => debye_kappa(species, temperature, units)?,
            (None, None) => {
                return Err(CliError::Usage(
                    "either --kappa or --species is required".to_owned(),
                ))
            }
        };
        let state = match units {
            UnitSystem::Natural => SystemState::new(temperature, gap, kappa)?,
            UnitSystem::Si => to_natural(temperature, gap, kappa)?,
        };
        Ok(Self {
            state,
            units,
            temperature,
            gap,
            kappa,
        })
    }

    /// Converts a kernel pressure (units `T/L³`) to pascals on the SI path.
    pub fn to_pascal(&self, p: f64) -> Result<Option<f64>, CliError> {
        match self.units {
            UnitSystem::Natural => Ok(None),
            UnitSystem::Si => Ok(Some(pressure_to_si(p, self.gap, self.temperature)?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub units: UnitSystem,
    pub temperature: f64,
    pub gap: f64,
    /// Inverse Debye length actually used, in input units.
    pub kappa: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub species: Option<Vec<IonSpecies>>,
    pub rel_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dimensionless {
    pub temperature_gap: f64,
    pub kappa_gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SiPressures {
    pub pi_ion_pa: f64,
    pub pi_em_pa: f64,
    pub pi_em_zero_mode_pa: f64,
    pub pi_total_pa: f64,
}

/// `|closed - raw| / |raw|` for each kernel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleDeltas {
    pub pi_ion: f64,
    pub pi_em: f64,
    pub pi_total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub tool: String,
    pub version: String,
    pub interface: String,
    pub timestamp: String,
    pub inputs: Inputs,
    pub dimensionless: Dimensionless,
    pub breakdown: PressureBreakdown,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub si: Option<SiPressures>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDeltas>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classicality: Option<Vec<ClassicalityReport>>,
}

impl RunRecord {
    pub(crate) fn build(
        resolved: &ResolvedState,
        species: Option<Vec<IonSpecies>>,
        rel_tol: f64,
        timestamp: String,
    ) -> Result<Self, CliError> {
        let breakdown = pi_total(&resolved.state, rel_tol)?;
        let si = match resolved.units {
            UnitSystem::Natural => None,
            UnitSystem::Si => {
                let pa = |p: f64| resolved.to_pascal(p).map(|v| v.unwrap_or(f64::NAN));
                Some(SiPressures {
                    pi_ion_pa: pa(breakdown.pi_ion)?,
                    pi_em_pa: pa(breakdown.pi_em)?,
                    pi_em_zero_mode_pa: pa(breakdown.pi_em_zero_mode)?,
                    pi_total_pa: pa(breakdown.pi_total)?,
                })
            }
        };
        let classicality = match &species {
            Some(list)
                if !list.is_empty()
                    && list.iter().all(|s| s.mass.is_some() && s.density > 0.0) =>
            {
                Some(classicality_check(list, resolved.temperature, resolved.units)?)
            }
            _ => None,
        };
        let record = RunRecord {
            tool: TOOL_NAME.to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            interface: INTERFACE_VERSION.to_owned(),
            timestamp,
            inputs: Inputs {
                units: resolved.units,
                temperature: resolved.temperature,
                gap: resolved.gap,
                kappa: resolved.kappa,
                species,
                rel_tol,
            },
            dimensionless: Dimensionless {
                temperature_gap: resolved.state.temperature_gap(),
                kappa_gap: resolved.state.kappa_gap(),
            },
            breakdown,
            si,
            oracle: None,
            classicality,
        };
        record.check_finite()?;
        Ok(record)
    }

    fn numbers(&self) -> Vec<f64> {
        let b = &self.breakdown;
        let mut v = vec![
            self.inputs.temperature,
            self.inputs.gap,
            self.inputs.kappa,
            self.inputs.rel_tol,
            self.dimensionless.temperature_gap,
            self.dimensionless.kappa_gap,
            b.pi_ion,
            b.pi_em,
            b.pi_em_zero_mode,
            b.pi_total,
            b.truncation_error_estimate,
        ];
        if let Some(si) = &self.si {
            v.extend([si.pi_ion_pa, si.pi_em_pa, si.pi_em_zero_mode_pa, si.pi_total_pa]);
        }
        if let Some(o) = &self.oracle {
            v.extend([o.pi_ion, o.pi_em, o.pi_total]);
        }
        v
    }

    fn check_finite(&self) -> Result<(), CliError> {
        if self.numbers().iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(CliError::Numerical(
                "result contains a non-finite value".to_owned(),
            ))
        }
    }
}

pub(crate) fn timestamp_now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn relative_delta(closed: f64, raw: f64) -> f64 {
    if closed == raw {
        0.0
    } else {
        (closed - raw).abs() / raw.abs().max(f64::MIN_POSITIVE)
    }
}

fn load_species(args: &StateArgs) -> Result<Option<Vec<IonSpecies>>, CliError> {
    args.species.as_deref().map(read_species).transpose()
}

fn check_rel_tol(rel_tol: f64) -> Result<(), CliError> {
    if rel_tol.is_finite() && rel_tol > 0.0 && rel_tol <= crate::pressure::MAX_REL_TOL {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--rel-tol must lie in (0, 1e-3], got {rel_tol}"
        )))
    }
}

/// The `compute` subcommand.
pub fn compute(args: &StateArgs, oracle: bool) -> Result<RunRecord, CliError> {
    check_rel_tol(args.rel_tol)?;
    let species = load_species(args)?;
    let resolved = ResolvedState::new(
        args.units.into(),
        args.temperature,
        args.gap,
        args.kappa,
        species.as_deref(),
    )?;
    let mut record = RunRecord::build(&resolved, species, args.rel_tol, timestamp_now())?;
    if oracle {
        let state = &resolved.state;
        let b = &record.breakdown;
        let em = pi_em_raw_auto(state)?;
        record.oracle = Some(OracleDeltas {
            pi_ion: relative_delta(b.pi_ion, pi_ion_raw(state)?.value),
            pi_em: relative_delta(b.pi_em, em.value),
            pi_total: relative_delta(b.pi_total, pi_total_raw(state)?.value),
        });
        record.check_finite()?;
    }
    Ok(record)
}

/// Output of the `compare` subcommand, pressures in units of `T/L³`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub kappa_gap: f64,
    pub temperature_gap: f64,
    pub schwinger_zero_mode: f64,
    pub lifshitz_zero_mode: f64,
    /// Ion pressure plus the Schwinger zero mode.
    pub screened_total: f64,
    pub schwinger_over_lifshitz: f64,
    pub screened_over_lifshitz: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pascal: Option<[f64; 3]>,
}

impl CompareReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let rows = [
            ("schwinger_zero_mode", self.schwinger_zero_mode),
            ("lifshitz_zero_mode", self.lifshitz_zero_mode),
            ("screened_total", self.screened_total),
        ];
        match self.pascal {
            None => {
                s.push_str("quantity,value\n");
                for (name, v) in rows {
                    s.push_str(&format!("{name},{}\n", format_g17(v)));
                }
            }
            Some(pa) => {
                s.push_str("quantity,value,value_pa\n");
                for ((name, v), p) in rows.into_iter().zip(pa) {
                    s.push_str(&format!("{name},{},{}\n", format_g17(v), format_g17(p)));
                }
            }
        }
        s.push_str(&format!(
            "schwinger_over_lifshitz,{:.6}\n",
            self.schwinger_over_lifshitz
        ));
        s.push_str(&format!(
            "screened_over_lifshitz,{:.6}\n",
            self.screened_over_lifshitz
        ));
        s
    }
}

/// The `compare` subcommand.
pub fn compare(args: &StateArgs) -> Result<CompareReport, CliError> {
    check_rel_tol(args.rel_tol)?;
    let species = load_species(args)?;
    let resolved = ResolvedState::new(
        args.units.into(),
        args.temperature,
        args.gap,
        args.kappa,
        species.as_deref(),
    )?;
    let schwinger = pi_em_zero_mode(ZeroModeConvention::Schwinger);
    let lifshitz = pi_em_zero_mode(ZeroModeConvention::Lifshitz);
    let screened = pi_ion(&resolved.state) + schwinger;
    let pascal = match resolved.units {
        UnitSystem::Natural => None,
        UnitSystem::Si => {
            let pa = |p: f64| pressure_to_si(p, resolved.gap, resolved.temperature);
            Some([pa(schwinger)?, pa(lifshitz)?, pa(screened)?])
        }
    };
    Ok(CompareReport {
        kappa_gap: resolved.state.kappa_gap(),
        temperature_gap: resolved.state.temperature_gap(),
        schwinger_zero_mode: schwinger,
        lifshitz_zero_mode: lifshitz,
        screened_total: screened,
        schwinger_over_lifshitz: schwinger / lifshitz,
        screened_over_lifshitz: screened / lifshitz,
        pascal,
    })
}
