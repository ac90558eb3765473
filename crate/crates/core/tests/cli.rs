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

use std::f64::consts::PI;
use std::fs;
use std::process::{Command, Output};

use casimir_core::cli::{CompareReport, RunRecord};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("run casimir")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn record(args: &[&str]) -> RunRecord {
    serde_json::from_str(&stdout(&casimir(args))).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn version_names_interface() {
    let text = stdout(&casimir(&["--version"]));
    assert_eq!(text.trim(), format!("casimir {} (interface 1)", env!("CARGO_PKG_VERSION")));
}

#[test]
fn compute_without_ions() {
    let r = record(&["compute", "--kappa", "0", "--units", "natural", "--temperature", "10", "--gap", "1"]);
    assert_eq!(r.breakdown.pi_ion, 0.0);
    assert_eq!(r.breakdown.pi_total, r.breakdown.pi_em);
    assert!(r.si.is_none() && r.oracle.is_none());
}

#[test]
fn compute_si_zero_mode() {
    let r = record(&["compute", "--units", "si", "--temperature", "300", "--gap", "1e-6", "--kappa", "0"]);
    let pa = r.si.unwrap().pi_em_zero_mode_pa;
    assert!((pa / -3.96e-4 - 1.0).abs() < 5e-3, "{pa}");
}

#[test]
fn compute_with_oracle() {
    let t = format!("{}", 1.0 / (2.0 * PI));
    let r = record(&["compute", "--temperature", &t, "--gap", "1", "--kappa", "1", "--oracle"]);
    let d = r.oracle.unwrap();
    assert!(d.pi_ion < 1e-8 && d.pi_em < 1e-8 && d.pi_total < 1e-8, "{d:?}");
}

#[test]
fn compute_from_species_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ions.json");
    fs::write(
        &path,
        r#"[{"name": "Na+", "charge": 1, "density": 6.02214076e23, "mass": 3.82e-26},
            {"name": "Cl-", "charge": -1, "density": 6.02214076e23, "mass": 5.89e-26}]"#,
    )
    .unwrap();
    let r = record(&[
        "compute", "--units", "si", "--temperature", "300", "--gap", "1e-8", "--species",
        path.to_str().unwrap(),
    ]);
    // vacuum Debye length of 1 mol/m³ salt at 300 K
    assert!((1.0 / r.inputs.kappa / 1.089_120_144_5e-9 - 1.0).abs() < 1e-9);
    assert!((r.dimensionless.kappa_gap - 1e-8 * r.inputs.kappa).abs() < 1e-12);
    let report = r.classicality.unwrap();
    assert_eq!(report.len(), 2);
    assert!(report.iter().all(|c| c.classical));
    assert!(r.breakdown.pi_ion > 0.0);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let charged = dir.path().join("charged.json");
    fs::write(&charged, r#"[{"charge": 1, "density": 1.0}]"#).unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["compute", "--temperature", "1", "--gap", "1"],
        vec!["compute", "--temperature", "1", "--gap", "1", "--kappa", "1", "--species", "x.json"],
        vec!["compute", "--temperature", "0", "--gap", "1", "--kappa", "1"],
        vec!["compute", "--temperature", "1", "--gap", "1", "--kappa", "-2"],
        vec!["compute", "--temperature", "1", "--gap", "1", "--kappa", "1", "--rel-tol", "0.1"],
        vec!["compute", "--temperature", "1", "--gap", "1", "--species", charged.to_str().unwrap()],
        vec!["sweep", "--axis", "gap", "--start", "2", "--stop", "1", "--points", "3", "--temperature", "1", "--kappa", "0"],
        vec!["sweep", "--axis", "gap", "--start", "1", "--stop", "2", "--points", "1", "--temperature", "1", "--kappa", "0"],
        vec!["sweep", "--axis", "kappa", "--start", "1", "--stop", "2", "--points", "3", "--gap", "1"],
        vec!["frobnicate"],
    ];
    for args in cases {
        assert_eq!(casimir(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn numerical_failure_exits_3() {
    // 2πTL = 1e-10 needs ~1e10 Matsubara terms, beyond the budget
    let out = casimir(&["compute", "--temperature", "1.6e-11", "--gap", "1", "--kappa", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("did not converge"));
}

#[test]
fn unwritable_output_exits_4() {
    let out = casimir(&[
        "sweep", "--axis", "kappa", "--start", "0.1", "--stop", "1", "--points", "2",
        "--temperature", "1", "--gap", "1", "--output", "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn two_point_sweep_has_two_rows() {
    let text = stdout(&casimir(&[
        "sweep", "--axis", "gap", "--start", "1", "--stop", "2", "--points", "2",
        "--temperature", "1", "--kappa", "0.5",
    ]));
    assert_eq!(text.lines().next().unwrap(), "axis_value,pi_ion,pi_em,pi_em_zero,pi_total");
    assert_eq!(csv_rows(&text).len(), 2);
}

#[test]
fn kappa_sweep_ion_column_increases() {
    let text = stdout(&casimir(&[
        "sweep", "--axis", "kappa", "--start", "1e-3", "--stop", "10", "--points", "50",
        "--spacing", "log", "--temperature", "1", "--gap", "1",
    ]));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 50);
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]));
    assert!(rows.iter().all(|r| r[4] == r[1] + r[2]));
}

#[test]
fn temperature_sweep_reaches_vacuum_limit() {
    let start = format!("{}", 0.01 / (2.0 * PI));
    let stop = format!("{}", 50.0 / (2.0 * PI));
    let text = stdout(&casimir(&[
        "sweep", "--axis", "temperature", "--start", &start, "--stop", &stop, "--points", "20",
        "--spacing", "log", "--gap", "1", "--kappa", "0",
    ]));
    let rows = csv_rows(&text);
    // T L at gap 1 is the axis value; Π L⁴ = p T L
    let per_l4 = rows[0][4] * rows[0][0];
    assert!((per_l4 / (-PI * PI / 240.0) - 1.0).abs() < 1e-3, "{per_l4}");
    let last = rows.last().unwrap();
    assert!((last[4] / last[3] - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_from_config_with_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    fs::write(
        &config,
        r#"{"axis": "gap", "start": 1e-7, "stop": 1e-5, "points": 4, "spacing": "log",
            "units": "si", "temperature": 300, "kappa": 0, "format": "csv"}"#,
    )
    .unwrap();
    let out = dir.path().join("out.csv");
    let cfg = config.to_str().unwrap();
    stdout(&casimir(&["sweep", "--config", cfg, "--points", "3", "--output", out.to_str().unwrap()]));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "axis_value,pi_ion,pi_em,pi_em_zero,pi_total,pi_ion_Pa,pi_em_Pa,pi_total_Pa"
    );
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][0], 1e-7);
    assert!(rows.iter().all(|r| r[7] < 0.0));

    let json = stdout(&casimir(&["sweep", "--config", cfg, "--format", "json"]));
    let records: Vec<RunRecord> = serde_json::from_str(&json).unwrap();
    assert_eq!(records.len(), 4);
    for (r, row) in records.iter().zip(csv_rows(&stdout(&casimir(&["sweep", "--config", cfg])))) {
        assert_eq!(r.breakdown.pi_total, row[4]);
        assert_eq!(r.si.unwrap().pi_total_pa, row[7]);
    }
}

#[test]
fn unknown_config_field_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.json");
    fs::write(&config, r#"{"axis": "gap", "strat": 1}"#).unwrap();
    let out = casimir(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_rows() {
    let text = stdout(&casimir(&["compare", "--temperature", "1", "--gap", "1", "--kappa", "0"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "quantity,value");
    let value = |i: usize| lines[i].split(',').nth(1).unwrap().to_owned();
    assert_eq!(value(1), value(3), "screened row equals Schwinger row without ions");
    assert_eq!(lines[4], "schwinger_over_lifshitz,2.000000");

    let json = stdout(&casimir(&[
        "compare", "--temperature", "1", "--gap", "1", "--kappa", "10", "--format", "json",
    ]));
    let report: CompareReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report.schwinger_over_lifshitz, 2.0);
    assert!((report.screened_over_lifshitz - 1.0).abs() < 1e-6);
}
