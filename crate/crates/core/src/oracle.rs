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

//! Brute-force evaluation of the raw momentum integrals behind the
//! disjoining pressure:
//!
//! ```text
//! Π = -(T/4π) I(κ) - (T/4π) I(0) - (T/π) Σ_{n>=1} I(ω_n)
//! I(a) = ∫_0^∞ q √(q² + a²) (coth(√(q² + a²) L) - 1) dq
//! ```
//!
//! Nothing here goes through the Bose-integral series; the module exists to
//! check the closed forms in [`crate::pressure`]. Infinite upper limits are
//! cut where the exponential envelope is 50 e-folds down and the discarded
//! piece is bounded analytically and added to the error estimate.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::Result;
use crate::medium::SystemState;
use crate::quadrature::{integrate, Estimate, QuadratureConfig};

/// Value, absolute error estimate and evaluation count of an oracle run.
pub type OracleResult = Estimate;

const CUTOFF_EFOLDS: f64 = 50.0;
const ORACLE_REL_TOL: f64 = 1e-12;

/// Relative size of the Matsubara tail left out by [`pi_total_raw`].
const AUTO_TAIL_REL: f64 = 1e-15;

/// `coth(z) - 1 = 2 / (e^{2z} - 1)`, with its pole removed by the caller's
/// prefactor.
fn coth_minus_one(z: f64) -> f64 {
    2.0 / (2.0 * z).exp_m1()
}

/// `q u (coth(u L) - 1)` with `u = √(q² + a²)`.
fn photon_integrand(q: f64, a: f64, gap: f64) -> f64 {
    let u = q.hypot(a);
    if u == 0.0 {
        // q u / (e^{2uL} - 1) → q / (2L) → 0
        return 0.0;
    }
    q * u * coth_minus_one(u * gap)
}

/// `∫_U^∞ u² (coth(uL) - 1) du <= e^{-X}(X² + 2X + 2) / (4L³ (1 - e^{-X}))`
/// with `X = 2UL`.
fn envelope_tail(upper_u: f64, gap: f64) -> f64 {
    let x = 2.0 * upper_u * gap;
    (-x).exp() * (x * x + 2.0 * x + 2.0) / (-(-x).exp_m1() * 4.0 * gap.powi(3))
}

/// Momentum cut-off where `e^{-2uL}` has fallen `CUTOFF_EFOLDS` below its
/// value at `q = 0`.
fn momentum_cutoff(a: f64, gap: f64) -> (f64, f64) {
    let u_max = a + 0.5 * CUTOFF_EFOLDS / gap;
    ((u_max * u_max - a * a).sqrt(), u_max)
}

/// Upper bound on `I(a)`: `e^{-2aL}(2a²L² + 2aL + 1) / (2L³(1 - e^{-2aL}))`,
/// or `ζ(3)/(2L³) < 1/L³` at `a = 0`.
fn photon_envelope(a: f64, gap: f64) -> f64 {
    let w = a * gap;
    if w == 0.0 {
        return 1.0 / gap.powi(3);
    }
    (-2.0 * w).exp() * (2.0 * w * w + 2.0 * w + 1.0) / (2.0 * gap.powi(3) * -(-2.0 * w).exp_m1())
}

fn config_for(scale: f64) -> QuadratureConfig {
    QuadratureConfig {
        abs_tol: 1e-16 * scale,
        rel_tol: ORACLE_REL_TOL,
        ..QuadratureConfig::default()
    }
}

/// `I(a) = ∫_0^∞ q √(q² + a²) (coth(√(q² + a²) L) - 1) dq` in physical units.
pub fn photon_integral(a: f64, gap: f64) -> Result<OracleResult> {
    let envelope = photon_envelope(a, gap);
    if envelope < 1e-280 {
        // below any representable contribution
        return Ok(Estimate::new(0.0, envelope, 0));
    }
    let (q_max, u_max) = momentum_cutoff(a, gap);
    let config = config_for(envelope.min(1.0 / gap.powi(3)));
    let est = integrate(|q| photon_integrand(q, a, gap), 0.0, q_max, &config)?;
    Ok(Estimate::new(
        est.value,
        est.abs_error + envelope_tail(u_max, gap),
        est.evaluations,
    ))
}

/// Ion pressure from the difference of the screened and unscreened
/// longitudinal integrals, units `T/L³`.
pub fn pi_ion_raw(state: &SystemState) -> Result<OracleResult> {
    let gap = state.gap();
    let kappa = state.kappa();
    let (q_pure, _) = momentum_cutoff(0.0, gap);
    let (q_screened, u_screened) = momentum_cutoff(kappa, gap);
    let q_max = q_pure.max(q_screened);

    let difference = |q: f64| photon_integrand(q, 0.0, gap) - photon_integrand(q, kappa, gap);
    let est = integrate(difference, 0.0, q_max, &config_for(1.0 / gap.powi(3)))?;
    let tail = envelope_tail(q_max, gap) + envelope_tail(u_screened.max(q_max), gap);

    let scale = gap.powi(3) / (4.0 * PI);
    Ok(Estimate::new(
        est.value * scale,
        (est.abs_error + tail) * scale,
        est.evaluations,
    ))
}

/// Bound on `Σ_{n>N} I(nΔ)` from `I(a) <= e^{-2aL}(2a²L² + 2aL + 1) /
/// (2L³(1 - e^{-2aL}))`, which is decreasing in `a`.
fn matsubara_tail(n_max: usize, spacing: f64, gap: f64) -> f64 {
    let first = (n_max + 1) as f64 * spacing;
    let w = first * gap;
    let damp = -(-2.0 * w).exp_m1();
    let head = (-2.0 * w).exp() * (2.0 * w * w + 2.0 * w + 1.0) / (2.0 * gap.powi(3) * damp);
    let integral = (-2.0 * w).exp() * (w * w + 2.0 * w + 1.5) / (2.0 * gap.powi(4) * damp);
    head + integral / spacing
}

/// Electromagnetic pressure from the Matsubara modes `n = 0..=n_max`
/// (half weight on `n = 0`), units `T/L³`. The unsummed tail is bounded and
/// included in the error estimate.
pub fn pi_em_raw(state: &SystemState, n_max: usize) -> Result<OracleResult> {
    let gap = state.gap();
    let spacing = 2.0 * PI * state.temperature();
    let modes = (0..=n_max)
        .into_par_iter()
        .map(|n| photon_integral(n as f64 * spacing, gap))
        .collect::<Result<Vec<_>>>()?;

    let mut sum = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for (n, m) in modes.iter().enumerate() {
        let weight = if n == 0 { 0.5 } else { 1.0 };
        sum += weight * m.value;
        error += weight * m.abs_error;
        evaluations += m.evaluations;
    }
    let tail = matsubara_tail(n_max, spacing, gap);
    let scale = gap.powi(3) / PI;
    Ok(Estimate::new(-sum * scale, (error + tail) * scale, evaluations))
}

/// Smallest `n_max` whose Matsubara tail is below `AUTO_TAIL_REL` of the
/// zero mode.
pub fn auto_n_max(state: &SystemState) -> usize {
    let gap = state.gap();
    let spacing = 2.0 * PI * state.temperature();
    // ½ I(0) L³ = ζ(3)/4 > 0.3
    let target = AUTO_TAIL_REL * 0.3 / gap.powi(3);
    let mut n = 0;
    while matsubara_tail(n, spacing, gap) > target {
        n += 1;
    }
    n
}

/// [`pi_em_raw`] with `n_max` from [`auto_n_max`].
pub fn pi_em_raw_auto(state: &SystemState) -> Result<OracleResult> {
    pi_em_raw(state, auto_n_max(state))
}

/// All three terms of the total pressure as they stand before the
/// ion/electromagnetic regrouping: the screened electric term, the
/// unscreened `n = 0` term with weight `-T/4π`, and the `n >= 1` modes.
pub fn pi_total_raw(state: &SystemState) -> Result<OracleResult> {
    let gap = state.gap();
    let quarter = gap.powi(3) / (4.0 * PI);
    let screened = photon_integral(state.kappa(), gap)?;
    let pure = photon_integral(0.0, gap)?;

    let n_max = auto_n_max(state);
    let spacing = 2.0 * PI * state.temperature();
    let modes = (1..=n_max.max(1))
        .into_par_iter()
        .map(|n| photon_integral(n as f64 * spacing, gap))
        .collect::<Result<Vec<_>>>()?;
    let (mut higher, mut higher_error, mut evaluations) = (0.0, 0.0, 0);
    for m in &modes {
        higher += m.value;
        higher_error += m.abs_error;
        evaluations += m.evaluations;
    }
    higher_error += matsubara_tail(n_max.max(1), spacing, gap);

    let value = -quarter * screened.value - quarter * pure.value - 4.0 * quarter * higher;
    let error = quarter * (screened.abs_error + pure.abs_error) + 4.0 * quarter * higher_error;
    Ok(Estimate::new(
        value,
        error,
        evaluations + screened.evaluations + pure.evaluations,
    ))
}
