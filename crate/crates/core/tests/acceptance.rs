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

//! Acceptance criteria, one test per criterion. Each prints a single
//! `[PASS]` / `[FAIL]` line; run with `-- --nocapture` to see them.

use std::f64::consts::PI;
use std::process::Command;

use casimir_core::medium::{pressure_to_si, to_natural, SystemState};
use casimir_core::oracle::{pi_em_raw_auto, pi_ion_raw, pi_total_raw};
use casimir_core::pressure::{
    classical_radiation_pressure, pi_em, pi_em_zero_mode, pi_ion, pi_total, ZeroModeConvention,
};
use casimir_core::special_functions::{bose_tail, bose_tail_quadrature, zeta3};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const REL_TOL: f64 = 1e-10;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn verdict(id: &str, description: &str, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {description} -- {detail}");
    assert!(pass, "criterion {id} failed: {detail}");
}

fn state(kappa_gap: f64, two_pi_tl: f64) -> SystemState {
    SystemState::from_dimensionless(two_pi_tl / (2.0 * PI), kappa_gap).unwrap()
}

#[test]
fn criterion_1_zero_mode_constant() {
    let schwinger = pi_em_zero_mode(ZeroModeConvention::Schwinger);
    let lifshitz = pi_em_zero_mode(ZeroModeConvention::Lifshitz);
    let expected = -zeta3() / (4.0 * PI);
    // -ζ(3)/4π to 20 digits (mpmath): -0.09565664900779258556
    let err = (schwinger - expected).abs().max((schwinger + 0.095_656_649_007_792_58).abs());
    let pass = err <= 1e-12 && lifshitz == 0.5 * schwinger;
    verdict(
        "1",
        "Schwinger zero mode = -zeta(3)/(4 pi), Lifshitz = half",
        pass,
        format!("schwinger = {schwinger:.17}, |err| = {err:.1e}, lifshitz = {lifshitz:.17}"),
    );
}

#[test]
fn criterion_2_classical_radiation_identity() {
    let zero = pi_em_zero_mode(ZeroModeConvention::Schwinger);
    let mut worst: f64 = 0.0;
    for gap in [0.1, 1.0, 10.0] {
        let s = SystemState::new(1.0, gap, 0.0).unwrap();
        let r = classical_radiation_pressure(&s).unwrap();
        worst = worst.max(rel(r.value, zero));
    }
    verdict(
        "2",
        "classical radiation pressure = Schwinger zero mode at L in {0.1, 1, 10}",
        worst <= 1e-9,
        format!("max rel err = {worst:.2e}"),
    );
}

#[test]
fn criterion_3_screening_effect() {
    let zero = pi_em_zero_mode(ZeroModeConvention::Schwinger);
    let ratio = (pi_ion(&state(10.0, 1.0)) + zero) / zero;
    verdict(
        "3",
        "(pi_ion + zero mode) / zero mode = 1/2 at kL = 10",
        (ratio - 0.5).abs() <= 1e-6,
        format!("ratio = {ratio:.12}"),
    );
}

#[test]
fn criterion_4_ion_asymptotics() {
    // κL ≫ 1 branch: Π_ion 8πL³/T → ζ(3)
    let large = pi_ion(&state(15.0, 1.0)) * 8.0 * PI;
    let large_err = rel(large, zeta3());
    // κL ≪ 1 branch: Π_ion 4πL/(Tκ²) → 1
    let x = 0.01;
    let small = pi_ion(&state(x, 1.0)) * 4.0 * PI / (x * x);
    let small_err = (small - 1.0).abs();
    verdict(
        "4",
        "pi_ion 8piL^3/T -> zeta(3) (1e-5) at kL = 15; pi_ion 4piL/(T k^2) -> 1 (2%) at kL = 0.01",
        large_err <= 1e-5 && small_err <= 0.02,
        format!(
            "large-kL rel err = {large_err:.2e}; small-kL ratio = {small:.6} (exact kernel limit is 1/2)"
        ),
    );
}

#[test]
fn criterion_5_low_temperature_limit() {
    let two_pi_tl = 0.01;
    let em = pi_em(&state(0.0, two_pi_tl), REL_TOL).unwrap();
    let per_l4 = em.value * two_pi_tl / (2.0 * PI);
    let expected = -PI * PI / 240.0;
    let err = rel(per_l4, expected);
    verdict(
        "5",
        "pi_em L^4 = -pi^2/240 at kappa = 0, 2piTL = 0.01",
        err <= 1e-3,
        format!("pi_em L^4 = {per_l4:.10}, expected {expected:.10}, rel err = {err:.2e}"),
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let grid = [0.1, 0.5, 1.0, 5.0, 10.0];
    let mut worst = (0.0f64, "", 0.0, 0.0);
    for &k in &grid {
        for &t in &grid {
            let s = state(k, t);
            let closed = pi_total(&s, 1e-12).unwrap();
            let checks = [
                ("pi_ion", closed.pi_ion, pi_ion_raw(&s).unwrap().value),
                ("pi_em", closed.pi_em, pi_em_raw_auto(&s).unwrap().value),
                ("pi_total", closed.pi_total, pi_total_raw(&s).unwrap().value),
            ];
            for (name, c, r) in checks {
                let e = rel(c, r);
                if e > worst.0 {
                    worst = (e, name, k, t);
                }
            }
        }
    }
    verdict(
        "6",
        "closed forms match raw quadrature to 1e-8 on the 5x5 (kL, 2piTL) grid",
        worst.0 <= 1e-8,
        format!(
            "max rel err = {:.2e} ({} at kL = {}, 2piTL = {})",
            worst.0, worst.1, worst.2, worst.3
        ),
    );
}

#[test]
fn criterion_7_property_suites() {
    let mut runner = TestRunner::new(Config::with_cases(1000));
    let mut failures = Vec::new();

    let monotone = runner.run(&(0.0f64..60.0, 1e-6f64..1.0), |(x, dx)| {
        let x2 = x + dx * (1.0 + x);
        prop_assert!(bose_tail(x).unwrap() > bose_tail(x2).unwrap());
        Ok(())
    });
    let bounded = runner.run(&(0.0f64..700.0), |x| {
        let b = bose_tail(x).unwrap();
        prop_assert!((0.0..=2.0 * zeta3()).contains(&b));
        if x > 0.0 {
            let envelope = (-x).exp() * (x * x + 2.0 * x + 2.0) / -(-x).exp_m1();
            prop_assert!(b <= envelope * (1.0 + 1e-12));
        }
        Ok(())
    });
    let agreement = runner.run(&(-4.0f64..50f64.log10()), |log_x| {
        let x = 10f64.powf(log_x);
        let s = bose_tail(x).unwrap();
        let q = bose_tail_quadrature(x).unwrap().value;
        prop_assert!((s - q).abs() / s <= 1e-9, "x = {x}: {s} vs {q}");
        Ok(())
    });
    let ion = runner.run(&(1e-3f64..10.0, 0.0f64..20.0, 1e-4f64..1.0), |(t, k, dk)| {
        let a = SystemState::new(t, 1.0, k).unwrap();
        let b = SystemState::new(t, 1.0, k + dk * (1.0 + k)).unwrap();
        prop_assert!(pi_ion(&a) >= 0.0);
        prop_assert!(pi_ion(&b) > pi_ion(&a));
        Ok(())
    });
    let separation = runner.run(&(1e-2f64..50.0, 0.0f64..30.0, 0.1f64..10.0), |(t, k, l)| {
        let s = SystemState::new(t / l, l, k / l).unwrap();
        let b = pi_total(&s, REL_TOL).unwrap();
        prop_assert_eq!(b.pi_total, b.pi_ion + b.pi_em);
        prop_assert_eq!(b.pi_ion, pi_ion(&s));
        prop_assert_eq!(b.pi_em, pi_em(&s, REL_TOL).unwrap().value);
        Ok(())
    });
    for (name, outcome) in [
        ("bose_tail monotone", monotone.map_err(|e| e.to_string())),
        ("bose_tail bounds", bounded.map_err(|e| e.to_string())),
        ("series/quadrature 1e-9", agreement.map_err(|e| e.to_string())),
        ("pi_ion >= 0, increasing in kappa", ion.map_err(|e| e.to_string())),
        ("separation bit-exact", separation.map_err(|e| e.to_string())),
    ] {
        if let Err(e) = outcome {
            failures.push(format!("{name}: {e}"));
        }
    }
    verdict(
        "7",
        "property suites (1000 cases each)",
        failures.is_empty(),
        if failures.is_empty() {
            "5 suites x 1000 cases".to_owned()
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_8_si_spot_check() {
    let (t, l) = (300.0, 1e-6);
    let s = to_natural(t, l, 0.0).unwrap();
    let b = pi_total(&s, REL_TOL).unwrap();
    let pa = pressure_to_si(b.pi_em_zero_mode, l, t).unwrap();
    // hand value: -ζ(3) k_B T / (4π L³) = -3.9620477e-4 Pa
    let err = rel(pa, -3.96e-4);
    verdict(
        "8",
        "zero-mode pressure at 300 K, 1 um = -3.96e-4 Pa (0.5%)",
        err <= 5e-3,
        format!("{pa:.6e} Pa, rel err vs -3.96e-4 = {err:.2e}"),
    );
}

fn casimir(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("run casimir");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

#[test]
fn criterion_9_cli_goldens() {
    // κL = 10 at L = 1
    let (code, compare) = casimir(&[
        "compare", "--temperature", "1", "--gap", "1", "--kappa", "10",
    ]);
    let ratios_ok = code == 0
        && compare.contains("schwinger_over_lifshitz,2.000000\n")
        && compare.contains("screened_over_lifshitz,1.000000\n");

    let sweep = [
        "sweep", "--axis", "kappa", "--start", "0.001", "--stop", "10", "--points", "50",
        "--spacing", "log", "--temperature", "0.5", "--gap", "1",
    ];
    let (c1, first) = casimir(&sweep);
    let (c2, second) = casimir(&sweep);
    let stable = c1 == 0 && c2 == 0 && first == second && first.lines().count() == 51;

    verdict(
        "9",
        "compare ratios 2 and 1.000000 at kL = 10; sweep CSV byte-stable",
        ratios_ok && stable,
        format!("compare exit {code}, ratios ok = {ratios_ok}; sweep byte-stable = {stable}"),
    );
}
