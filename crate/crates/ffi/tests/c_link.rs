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


//! Compiles a C program against the generated header and static library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("include/casimir.h"),
    )
    .unwrap();
    for symbol in [
        "typedef struct CasimirSystem CasimirSystem;",
        "CASIMIR_STATUS_CONVERGENCE = 4",
        "casimir_system_new(",
        "casimir_system_new_si(",
        "casimir_system_free(",
        "casimir_pressure_breakdown(",
        "casimir_last_error_message(",
        "casimir_version(void)",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler on PATH; skipping");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = profile_dir().join("libcasimir_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());

    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status);
    let stdout = String::from_utf8(run.stdout).unwrap();

    let state = casimir_core::SystemState::new(1.0, 1.0, 2.0).unwrap();
    let expected = casimir_core::pressure::pi_total(&state, 1e-10).unwrap().pi_total;
    let line = stdout.lines().next().unwrap();
    let got: f64 = line.strip_prefix("pi_total ").unwrap().parse().unwrap();
    assert_eq!(got, expected);
    assert!(stdout.contains("error ") && stdout.contains("gap"));
    assert!(stdout.contains(&format!("version {}", env!("CARGO_PKG_VERSION"))));
}
