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

//! Physical description of the confined plasma and the bridge between SI
//! and natural (`k_B = ħ = c = 1`, Heaviside-Lorentz) units.
//!
//! Kernels only ever see the dimensionless groups `TL` and `κL`; a
//! [`SystemState`] built by [`to_natural`] measures lengths in units of the
//! gap, so `L = 1` and `T = k_B T L / (ħ c)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};

/// CODATA 2018 values.
pub mod codata {
    /// Boltzmann constant, J/K (exact).
    pub const BOLTZMANN: f64 = 1.380_649e-23;
    /// Planck constant, J s (exact).
    pub const PLANCK: f64 = 6.626_070_15e-34;
    /// Reduced Planck constant, J s.
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Speed of light in vacuum, m/s (exact).
    pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
    /// Elementary charge, C (exact).
    pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
    /// Vacuum permittivity, F/m.
    pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
    /// Avogadro constant, 1/mol (exact).
    pub const AVOGADRO: f64 = 6.022_140_76e23;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// `k_B = ħ = c = 1`, rationalized charges.
    #[default]
    Natural,
    /// Kelvin, metres, elementary charges, m⁻³ and kg.
    Si,
}

/// One mobile ion species.
///
/// In natural units `charge` is the rationalized charge `q_a`; on the SI path
/// it is the valence in elementary charges, `density` is in m⁻³ and `mass`
/// in kg.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IonSpecies {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub charge: f64,
    pub density: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
}

impl IonSpecies {
    pub fn new(charge: f64, density: f64) -> Self {
        Self {
            name: None,
            charge,
            density,
            mass: None,
        }
    }

    pub fn with_mass(mut self, mass: f64) -> Self {
        self.mass = Some(mass);
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    fn label(&self, index: usize) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!("species #{index}"),
        }
    }

    pub fn validate(&self, index: usize) -> Result<()> {
        ensure_finite("ion charge", self.charge)?;
        ensure_finite("ion density", self.density)?;
        if self.density < 0.0 {
            return Err(Error::Validation(format!(
                "{}: density must be >= 0, got {}",
                self.label(index),
                self.density
            )));
        }
        if let Some(mass) = self.mass {
            if !(mass.is_finite() && mass > 0.0) {
                return Err(Error::Validation(format!(
                    "{}: mass must be finite and > 0, got {mass}",
                    self.label(index)
                )));
            }
        }
        Ok(())
    }
}

/// Temperature, gap width and inverse Debye length in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemState {
    temperature: f64,
    gap: f64,
    kappa: f64,
    beta: f64,
}

impl SystemState {
    pub fn new(temperature: f64, gap: f64, kappa: f64) -> Result<Self> {
        ensure_finite("temperature", temperature)?;
        ensure_finite("gap width", gap)?;
        ensure_finite("kappa", kappa)?;
        if temperature <= 0.0 {
            return Err(Error::Validation(format!(
                "temperature must be > 0, got {temperature}"
            )));
        }
        if gap <= 0.0 {
            return Err(Error::Validation(format!("gap width must be > 0, got {gap}")));
        }
        if kappa < 0.0 {
            return Err(Error::Validation(format!("kappa must be >= 0, got {kappa}")));
        }
        let beta = 1.0 / temperature;
        if !beta.is_finite() {
            return Err(Error::Validation(format!(
                "temperature {temperature} is too small to invert"
            )));
        }
        Ok(Self {
            temperature,
            gap,
            kappa,
            beta,
        })
    }

    /// State with `L = 1` from the dimensionless groups `TL` and `κL`.
    pub fn from_dimensionless(temperature_gap: f64, kappa_gap: f64) -> Result<Self> {
        Self::new(temperature_gap, 1.0, kappa_gap)
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn gap(&self) -> f64 {
        self.gap
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `TL`, the only temperature dependence of the kernels.
    pub fn temperature_gap(&self) -> f64 {
        self.temperature * self.gap
    }

    /// `κL`.
    pub fn kappa_gap(&self) -> f64 {
        self.kappa * self.gap
    }

    pub fn with_gap(&self, gap: f64) -> Result<Self> {
        Self::new(self.temperature, gap, self.kappa)
    }

    pub fn with_kappa(&self, kappa: f64) -> Result<Self> {
        Self::new(self.temperature, self.gap, kappa)
    }

    pub fn with_temperature(&self, temperature: f64) -> Result<Self> {
        Self::new(temperature, self.gap, self.kappa)
    }
}

fn check_electroneutral(species: &[IonSpecies]) -> Result<()> {
    let net: f64 = species.iter().map(|s| s.charge * s.density).sum();
    let scale: f64 = species.iter().map(|s| (s.charge * s.density).abs()).sum();
    if net.abs() > 1e-9 * scale {
        return Err(Error::Validation(format!(
            "species are not electroneutral: net charge density {net:e} (scale {scale:e})"
        )));
    }
    Ok(())
}

/// Inverse Debye length `κ = (β Σ_a q_a² n_a)^{1/2}`.
///
/// The SI path uses the vacuum form `κ² = Σ (z_a e)² n_a / (ε₀ k_B T)` with
/// `T` in kelvin; the result is in m⁻¹. An empty species list gives `κ = 0`.
pub fn debye_kappa(species: &[IonSpecies], temperature: f64, units: UnitSystem) -> Result<f64> {
    ensure_finite("temperature", temperature)?;
    if temperature <= 0.0 {
        return Err(Error::Validation(format!(
            "temperature must be > 0, got {temperature}"
        )));
    }
    for (i, s) in species.iter().enumerate() {
        s.validate(i)?;
    }
    check_electroneutral(species)?;

    let strength: f64 = species.iter().map(|s| s.charge * s.charge * s.density).sum();
    let kappa_sq = match units {
        UnitSystem::Natural => strength / temperature,
        UnitSystem::Si => {
            let e = codata::ELEMENTARY_CHARGE;
            strength * e * e
                / (codata::VACUUM_PERMITTIVITY * codata::BOLTZMANN * temperature)
        }
    };
    Ok(kappa_sq.sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalityReport {
    pub species: String,
    /// `λ_a = (2π β / m_a)^{1/2}`, or `h / (2π m_a k_B T)^{1/2}` in SI.
    pub thermal_wavelength: f64,
    /// `n_a^{-1/3}`; infinite when the species is absent.
    pub mean_spacing: f64,
    pub ratio: f64,
    /// `ratio < 0.1`
    pub classical: bool,
}

/// Threshold on `λ_a / d_a` below which a species counts as classical.
pub const CLASSICALITY_THRESHOLD: f64 = 0.1;

/// Compares each species' thermal wavelength with its mean spacing.
pub fn classicality_check(
    species: &[IonSpecies],
    temperature: f64,
    units: UnitSystem,
) -> Result<Vec<ClassicalityReport>> {
    ensure_finite("temperature", temperature)?;
    if temperature <= 0.0 {
        return Err(Error::Validation(format!(
            "temperature must be > 0, got {temperature}"
        )));
    }
    species
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.validate(i)?;
            let mass = s.mass.ok_or_else(|| {
                Error::Validation(format!("{}: mass is required", s.label(i)))
            })?;
            let thermal_wavelength = match units {
                UnitSystem::Natural => (2.0 * PI / (mass * temperature)).sqrt(),
                UnitSystem::Si => {
                    codata::PLANCK / (2.0 * PI * mass * codata::BOLTZMANN * temperature).sqrt()
                }
            };
            let mean_spacing = s.density.powf(-1.0 / 3.0);
            let ratio = thermal_wavelength / mean_spacing;
            Ok(ClassicalityReport {
                species: s.label(i),
                thermal_wavelength,
                mean_spacing,
                ratio,
                classical: ratio < CLASSICALITY_THRESHOLD,
            })
        })
        .collect()
}

/// `ħc / k_B` in metre-kelvin.
pub fn thermal_length_constant() -> f64 {
    codata::HBAR * codata::SPEED_OF_LIGHT / codata::BOLTZMANN
}

/// Builds the gap-gauged natural state (`L = 1`) from SI inputs.
pub fn to_natural(temperature_k: f64, gap_m: f64, kappa_per_m: f64) -> Result<SystemState> {
    ensure_finite("temperature", temperature_k)?;
    ensure_finite("gap width", gap_m)?;
    ensure_finite("kappa", kappa_per_m)?;
    if temperature_k <= 0.0 || gap_m <= 0.0 || kappa_per_m < 0.0 {
        return Err(Error::Validation(format!(
            "need T > 0, L > 0, kappa >= 0; got T = {temperature_k} K, L = {gap_m} m, kappa = {kappa_per_m} 1/m"
        )));
    }
    let theta = temperature_k * gap_m / thermal_length_constant();
    SystemState::from_dimensionless(theta, kappa_per_m * gap_m)
}

/// Converts a kernel pressure (units `T/L³`) to pascals:
/// `Π = p k_B T / L³`.
pub fn pressure_to_si(p_natural: f64, gap_m: f64, temperature_k: f64) -> Result<f64> {
    ensure_finite("pressure", p_natural)?;
    ensure_finite("gap width", gap_m)?;
    ensure_finite("temperature", temperature_k)?;
    if gap_m <= 0.0 || temperature_k <= 0.0 {
        return Err(Error::Validation(format!(
            "need L > 0 and T > 0; got L = {gap_m} m, T = {temperature_k} K"
        )));
    }
    Ok(p_natural * codata::BOLTZMANN * temperature_k / gap_m.powi(3))
}

/// Converts a free energy per area (units `T/L²`) to J/m².
pub fn energy_density_to_si(g_natural: f64, gap_m: f64, temperature_k: f64) -> Result<f64> {
    Ok(pressure_to_si(g_natural, gap_m, temperature_k)? * gap_m)
}
