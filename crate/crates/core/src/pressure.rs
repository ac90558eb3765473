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

//! Closed-form disjoining pressures.
//!
//! All kernels return pressures in units of `T/L³` (free energies in
//! `T/L²`) and depend on the state only through `κL` and `TL`:
//!
//! ```text
//! Π_ion = (T / 8πL³) [ζ(3) - ½ B(2κL)]
//! Π_EM  = -(T / 4πL³) Σ'_{n>=0} B(2ω_n L),    ω_n = 2πnT
//! Π     = Π_ion + Π_EM
//! ```
//!
//! where `B` is [`bose_tail`](crate::special_functions::bose_tail) and the
//! primed sum carries weight ½ on `n = 0`.

use std::cell::RefCell;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::medium::SystemState;
use crate::quadrature::{integrate, Estimate, QuadratureConfig};
use crate::special_functions::{
    bose_head_unchecked, bose_tail_unchecked, bose_tail_upper_bound, ZETA3,
};

/// Default relative tolerance of the Matsubara sum.
pub const DEFAULT_REL_TOL: f64 = 1e-10;
/// Loosest accepted relative tolerance.
pub const MAX_REL_TOL: f64 = 1e-3;
/// Default cap on the number of Matsubara terms.
pub const DEFAULT_TERM_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroModeConvention {
    /// Ideal-conductor limit taken before `ω → 0`.
    Schwinger,
    /// Half the Schwinger value.
    Lifshitz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticBranch {
    LargeKappaL,
    SmallKappaL,
}

/// Full pressure decomposition, every field in units of `T/L³`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PressureBreakdown {
    pub pi_ion: f64,
    pub pi_em: f64,
    /// Schwinger `n = 0` term, the classical radiation pressure.
    pub pi_em_zero_mode: f64,
    pub pi_total: f64,
    pub matsubara_terms_used: usize,
    pub truncation_error_estimate: f64,
}

/// Result of the truncated Matsubara sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraSum {
    pub value: f64,
    /// Number of modes summed, `n = 0` included.
    pub terms_used: usize,
    pub error_estimate: f64,
}

/// Photon-mode eigenvalues `λ = q² + q_l² + ω_n²` and `λ' = λ + κ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub q_perp: f64,
    pub n: i64,
    pub l: u32,
    pub lambda: f64,
    pub lambda_prime: f64,
}

/// Eigenvalue of mode `(q_⊥, n, l)` with `q_l = πl/L` and `ω_n = 2πnT`.
pub fn eigenvalue(q_perp: f64, n: i64, l: u32, state: &SystemState) -> Eigenvalue {
    let q_l = PI * f64::from(l) / state.gap();
    let omega = 2.0 * PI * n as f64 * state.temperature();
    let lambda = q_perp * q_perp + q_l * q_l + omega * omega;
    Eigenvalue {
        q_perp,
        n,
        l,
        lambda,
        lambda_prime: lambda + state.kappa() * state.kappa(),
    }
}

/// Repulsive image-charge pressure of the confined ions.
///
/// `ζ(3) - ½B(2κL)` is taken as `½∫_0^{2κL} y²/(eʸ-1) dy` so that small `κL`
/// keeps full relative precision. Never negative; zero at `κ = 0`.
pub fn pi_ion(state: &SystemState) -> f64 {
    bose_head_unchecked(2.0 * state.kappa_gap()) / (16.0 * PI)
}

/// Limiting forms of [`pi_ion`]: `ζ(3)/8π` for `κL ≫ 1` and `(κL)²/4π` for
/// `κL ≪ 1`.
///
/// The small-`κL` branch reproduces the published asymptote; the exact
/// kernel approaches half of it (`(κL)²/8π`).
pub fn pi_ion_asymptotic(state: &SystemState, branch: AsymptoticBranch) -> f64 {
    match branch {
        AsymptoticBranch::LargeKappaL => ZETA3 / (8.0 * PI),
        AsymptoticBranch::SmallKappaL => state.kappa_gap().powi(2) / (4.0 * PI),
    }
}

/// Bound on `Σ_{m>n} B(mh)` given `x = nh`, from `B` decreasing and
/// `∫_x^∞ B <= e^{-x}(x² + 4x + 6) / (1 - e^{-x})`.
fn matsubara_tail_bound(x: f64, step: f64) -> f64 {
    (-x).exp() * (x * x + 4.0 * x + 6.0) / (-(-x).exp_m1() * step)
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if rel_tol.is_finite() && rel_tol > 0.0 && rel_tol <= MAX_REL_TOL {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "rel_tol must lie in (0, {MAX_REL_TOL}], got {rel_tol}"
        )))
    }
}

/// Electromagnetic (Schwinger) pressure, summed over Matsubara modes.
pub fn pi_em(state: &SystemState, rel_tol: f64) -> Result<MatsubaraSum> {
    pi_em_with_budget(state, rel_tol, DEFAULT_TERM_BUDGET)
}

/// [`pi_em`] with an explicit cap on the number of `n >= 1` terms.
///
/// Summation stops once at least three modes are in and the bound on the
/// remaining tail is below `rel_tol` times the partial sum.
pub fn pi_em_with_budget(state: &SystemState, rel_tol: f64, budget: usize) -> Result<MatsubaraSum> {
    check_rel_tol(rel_tol)?;
    let step = 4.0 * PI * state.temperature_gap();
    let mut sum = ZETA3;
    let mut n = 0usize;
    let tail = loop {
        n += 1;
        let x = n as f64 * step;
        sum += bose_tail_unchecked(x).value;
        let tail = matsubara_tail_bound(x, step);
        if n >= 2 && tail <= rel_tol * sum {
            break tail;
        }
        if n >= budget {
            return Err(Error::Convergence {
                what: format!("Matsubara sum at TL = {}", state.temperature_gap()),
                achieved: tail / sum,
            });
        }
    };
    let scale = 1.0 / (4.0 * PI);
    Ok(MatsubaraSum {
        value: -sum * scale,
        terms_used: n + 1,
        error_estimate: (tail + (n + 1) as f64 * f64::EPSILON * sum) * scale,
    })
}

/// The `n = 0` electromagnetic term, `-ζ(3)/4π` (Schwinger) or half of it
/// (Lifshitz).
pub fn pi_em_zero_mode(convention: ZeroModeConvention) -> f64 {
    let schwinger = -ZETA3 / (4.0 * PI);
    match convention {
        ZeroModeConvention::Schwinger => schwinger,
        ZeroModeConvention::Lifshitz => 0.5 * schwinger,
    }
}

/// `Π = Π_ion + Π_EM` with its bookkeeping.
pub fn pi_total(state: &SystemState, rel_tol: f64) -> Result<PressureBreakdown> {
    let ion = pi_ion(state);
    let em = pi_em(state, rel_tol)?;
    Ok(PressureBreakdown {
        pi_ion: ion,
        pi_em: em.value,
        pi_em_zero_mode: pi_em_zero_mode(ZeroModeConvention::Schwinger),
        pi_total: ion + em.value,
        matsubara_terms_used: em.terms_used,
        truncation_error_estimate: em.error_estimate,
    })
}

/// Pressure of equilibrium classical radiation between the plates,
/// `-T ∫ d²q/(2π)² q (coth(qL) - 1)`, by direct quadrature at the state's
/// gap.
pub fn classical_radiation_pressure(state: &SystemState) -> Result<Estimate> {
    let gap = state.gap();
    // coth(z) - 1 = 2 / (e^{2z} - 1)
    let integrand = |q: f64| {
        let z = 2.0 * q * gap;
        if z == 0.0 {
            0.0
        } else {
            2.0 * q * q / z.exp_m1()
        }
    };
    let upper_z = 50.0;
    let upper = upper_z / (2.0 * gap);
    let tail = bose_tail_upper_bound(upper_z) / (4.0 * gap.powi(3));
    let est = integrate(integrand, 0.0, upper, &QuadratureConfig::with_rel_tol(1e-12))?;
    let scale = gap.powi(3) / (2.0 * PI);
    Ok(Estimate::new(
        -est.value * scale,
        (est.abs_error + tail) * scale,
        est.evaluations,
    ))
}

/// Interaction free energy per area `g(L) = ∫_L^∞ Π(L') dL'` at fixed `T`
/// and `κ`, in units of `T/L²`; `Π = -∂g/∂L` and `g(∞) = 0`.
pub fn interaction_free_energy(state: &SystemState, rel_tol: f64) -> Result<Estimate> {
    check_rel_tol(rel_tol)?;
    let kappa_gap = state.kappa_gap();
    let temperature_gap = state.temperature_gap();
    let failure: RefCell<Option<Error>> = RefCell::new(None);

    // With s = L'/L and t = 1/s: g L² / T = ∫_0^1 t p(κL/t, TL/t) dt.
    let integrand = |t: f64| {
        let scaled = match SystemState::from_dimensionless(temperature_gap / t, kappa_gap / t) {
            Ok(s) => s,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                return 0.0;
            }
        };
        match pi_em(&scaled, rel_tol) {
            Ok(em) => t * (pi_ion(&scaled) + em.value),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let config = QuadratureConfig::with_rel_tol(rel_tol.max(1e-12));
    let est = integrate(integrand, 0.0, 1.0, &config)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(est)
}
