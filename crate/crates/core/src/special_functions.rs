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

//! The incomplete Bose-Einstein integral
//!
//! ```text
//! B(x) = ∫_x^∞ y² / (eʸ - 1) dy,        B(0) = 2ζ(3)
//! ```
//!
//! Every pressure kernel in this crate reduces to `B` evaluated at `2aL` for
//! some inverse length `a` (the Debye parameter or a Matsubara frequency).
//!
//! For `x >= 1` the integrand is expanded as `y² Σ e^{-ky}` and integrated
//! term by term, which converges like `e^{-kx}`. Below that the complement
//! `∫_0^x` is taken from the Bernoulli expansion of `y / (eʸ - 1)`, which
//! converges like `(x / 2π)^k` and needs no subtraction near `x = 0`.

use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureConfig};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// `B(0) = ∫_0^∞ y² / (eʸ - 1) dy = 2ζ(3)`.
pub const BOSE_TAIL_AT_ZERO: f64 = 2.0 * ZETA3;

const SERIES_SWITCH: f64 = 1.0;

// B_{2j} / (2j)! for j = 1..=15.
#[allow(clippy::excessive_precision)]
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    0.083_333_333_333_333_333,
    -0.001_388_888_888_888_888_9,
    3.306_878_306_878_306_9e-5,
    -8.267_195_767_195_767_2e-7,
    2.087_675_698_786_809_9e-8,
    -5.284_190_138_687_493_2e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_9e-13,
    8.586_062_056_277_844_6e-15,
    -2.174_868_698_558_061_9e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_3e-19,
    3.534_707_039_629_467_5e-21,
    -8.953_517_427_037_546_9e-23,
    2.267_952_452_337_683_1e-24,
];

/// How a [`BoseTail`] value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMethod {
    /// Term-by-term exponential series, `x >= 1`.
    Series,
    /// `2ζ(3)` minus the Bernoulli expansion of `∫_0^x`, `x < 1`.
    SmallArgument,
    /// Adaptive quadrature (oracle path).
    Quadrature,
}

/// `B(x)` with the error estimate of the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoseTail {
    pub x: f64,
    pub value: f64,
    pub error_estimate: f64,
    pub method: TailMethod,
}

/// Apéry's constant ζ(3) = 1.2020569031595943.
pub const fn zeta3() -> f64 {
    ZETA3
}

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "Bose tail argument must be finite and >= 0, got {x}"
        )));
    }
    Ok(())
}

/// `∫_0^x y² / (eʸ - 1) dy` for `0 <= x < 2π` from
/// `y / (eʸ - 1) = Σ B_k y^k / k!`.
fn head_series(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let mut sum = 0.5 * x2 - x2 * x / 6.0;
    let mut power = x2 * x2;
    let mut last = 0.0;
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = coeff * power / (2 * j + 4) as f64;
        sum += term;
        last = term.abs();
        if last <= 1e-17 * sum.abs() {
            break;
        }
        power *= x2;
    }
    (sum, last + 4.0 * f64::EPSILON * sum.abs())
}

/// `Σ_k e^{-kx} (x²/k + 2x/k² + 2/k³)` for `x > 0`.
fn exponential_series(x: f64) -> (f64, f64) {
    let ratio = (-x).exp();
    let mut decay = ratio;
    let mut sum = 0.0;
    let mut k = 1.0_f64;
    loop {
        let term = decay * (x * x / k + 2.0 * x / (k * k) + 2.0 / (k * k * k));
        sum += term;
        if term < 1e-16 * sum || decay == 0.0 {
            // remaining terms are bounded by a geometric series in e^{-x}
            let tail = term * ratio / (1.0 - ratio);
            return (sum, tail + 2.0 * f64::EPSILON * sum);
        }
        decay *= ratio;
        k += 1.0;
    }
}

pub(crate) fn bose_tail_unchecked(x: f64) -> BoseTail {
    if x == 0.0 {
        return BoseTail {
            x,
            value: BOSE_TAIL_AT_ZERO,
            error_estimate: f64::EPSILON * BOSE_TAIL_AT_ZERO,
            method: TailMethod::SmallArgument,
        };
    }
    if x < SERIES_SWITCH {
        let (head, err) = head_series(x);
        BoseTail {
            x,
            value: BOSE_TAIL_AT_ZERO - head,
            error_estimate: err + f64::EPSILON * BOSE_TAIL_AT_ZERO,
            method: TailMethod::SmallArgument,
        }
    } else {
        let (value, error_estimate) = exponential_series(x);
        BoseTail {
            x,
            value,
            error_estimate,
            method: TailMethod::Series,
        }
    }
}

/// `∫_0^x y² / (eʸ - 1) dy = 2ζ(3) - B(x)`, evaluated without the
/// subtraction when `x` is small.
pub(crate) fn bose_head_unchecked(x: f64) -> f64 {
    if x < SERIES_SWITCH {
        head_series(x).0
    } else {
        BOSE_TAIL_AT_ZERO - exponential_series(x).0
    }
}

/// `B(x) = ∫_x^∞ y² / (eʸ - 1) dy`, relative error below `1e-12`.
pub fn bose_tail(x: f64) -> Result<f64> {
    bose_tail_detailed(x).map(|t| t.value)
}

/// [`bose_tail`] with its error estimate and evaluation route.
pub fn bose_tail_detailed(x: f64) -> Result<BoseTail> {
    check_argument(x)?;
    Ok(bose_tail_unchecked(x))
}

/// `∫_0^x y² / (eʸ - 1) dy`, the complement of [`bose_tail`].
pub fn bose_head(x: f64) -> Result<f64> {
    check_argument(x)?;
    Ok(bose_head_unchecked(x))
}

/// Upper bound on `B(x)` for `x > 0`: `e^{-x}(x² + 2x + 2) / (1 - e^{-x})`.
pub fn bose_tail_upper_bound(x: f64) -> f64 {
    let decay = (-x).exp();
    decay * (x * x + 2.0 * x + 2.0) / -(-x).exp_m1()
}

pub(crate) fn bose_integrand(y: f64) -> f64 {
    if y == 0.0 {
        0.0
    } else {
        y * y / y.exp_m1()
    }
}

/// Independent evaluation of `B(x)` by adaptive quadrature, used to check
/// the series.
///
/// The upper limit is pushed out until `e^{-X}(X² + 2X + 2) < 1e-18` and at
/// least 40 e-folds past `x`; the discarded tail is bounded analytically and
/// added to the error estimate.
pub fn bose_tail_quadrature(x: f64) -> Result<BoseTail> {
    bose_tail_quadrature_with(x, &QuadratureConfig::default())
}

pub fn bose_tail_quadrature_with(x: f64, config: &QuadratureConfig) -> Result<BoseTail> {
    check_argument(x)?;
    let mut upper = x + 40.0;
    while (-upper).exp() * (upper * upper + 2.0 * upper + 2.0) >= 1e-18 {
        upper += 5.0;
    }
    let tail = bose_tail_upper_bound(upper);
    let est = integrate(bose_integrand, x, upper, config)?;
    Ok(BoseTail {
        x,
        value: est.value,
        error_estimate: est.abs_error + tail,
        method: TailMethod::Quadrature,
    })
}
