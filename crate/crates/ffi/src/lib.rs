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

//! C ABI over `casimir-core`.
//!
//! Every fallible function returns a [`CasimirStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! fetched with [`casimir_last_error_message`]. States live behind the opaque
//! [`CasimirSystem`] handle, created by `casimir_system_new*` and released
//! with [`casimir_system_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use casimir_core::medium::{pressure_to_si, to_natural};
use casimir_core::pressure::{
    classical_radiation_pressure, interaction_free_energy, pi_em, pi_em_zero_mode, pi_ion,
    pi_total, ZeroModeConvention,
};
use casimir_core::special_functions::bose_tail;
use casimir_core::{Error, SystemState};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument lies outside the domain of the function.
    Domain = 2,
    /// Physical input violates a model constraint.
    Validation = 3,
    /// A sum or integral did not reach its tolerance.
    Convergence = 4,
    /// The library panicked; this is a bug.
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirZeroMode {
    Schwinger = 0,
    Lifshitz = 1,
}

/// Pressure decomposition in units of `T/L³`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CasimirBreakdown {
    pub pi_ion: f64,
    pub pi_em: f64,
    pub pi_em_zero_mode: f64,
    pub pi_total: f64,
    pub matsubara_terms_used: u64,
    pub truncation_error_estimate: f64,
}

/// Opaque system state (temperature, gap width, inverse Debye length in
/// natural units).
pub struct CasimirSystem {
    state: SystemState,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(e: Error) -> CasimirStatus {
    let status = match &e {
        Error::Domain(_) => CasimirStatus::Domain,
        Error::Validation(_) => CasimirStatus::Validation,
        Error::Convergence { .. } => CasimirStatus::Convergence,
    };
    set_last_error(e.to_string());
    status
}

fn guard<F>(body: F) -> CasimirStatus
where
    F: FnOnce() -> Result<(), CasimirStatus>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CasimirStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic".to_owned());
            CasimirStatus::Panic
        }
    }
}

fn null_error(what: &str) -> CasimirStatus {
    set_last_error(format!("{what} is null"));
    CasimirStatus::NullPointer
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), CasimirStatus> {
    if out.is_null() {
        return Err(null_error("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn system_ref<'a>(system: *const CasimirSystem) -> Result<&'a SystemState, CasimirStatus> {
    system
        .as_ref()
        .map(|s| &s.state)
        .ok_or_else(|| null_error("system handle"))
}

unsafe fn emit_system(
    state: Result<SystemState, Error>,
    out: *mut *mut CasimirSystem,
) -> Result<(), CasimirStatus> {
    if out.is_null() {
        return Err(null_error("output pointer"));
    }
    let state = state.map_err(status_of)?;
    out.write(Box::into_raw(Box::new(CasimirSystem { state })));
    Ok(())
}

/// Creates a state from natural-unit temperature, gap width and inverse
/// Debye length.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_system_new(
    temperature: f64,
    gap: f64,
    kappa: f64,
    out: *mut *mut CasimirSystem,
) -> CasimirStatus {
    guard(|| emit_system(SystemState::new(temperature, gap, kappa), out))
}

/// Creates a state from kelvin, metres and inverse metres. Lengths are
/// measured in units of the gap afterwards.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_system_new_si(
    temperature_k: f64,
    gap_m: f64,
    kappa_per_m: f64,
    out: *mut *mut CasimirSystem,
) -> CasimirStatus {
    guard(|| emit_system(to_natural(temperature_k, gap_m, kappa_per_m), out))
}

/// Releases a state. Null is ignored.
///
/// # Safety
/// `system` must be null or a handle from `casimir_system_new*` that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn casimir_system_free(system: *mut CasimirSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Writes the dimensionless groups `TL` and `κL`.
///
/// # Safety
/// `system` must be a live handle; the out-pointers null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_system_dimensionless(
    system: *const CasimirSystem,
    temperature_gap: *mut f64,
    kappa_gap: *mut f64,
) -> CasimirStatus {
    guard(|| {
        let state = system_ref(system)?;
        write_out(temperature_gap, state.temperature_gap())?;
        write_out(kappa_gap, state.kappa_gap())
    })
}

/// Full pressure decomposition.
///
/// # Safety
/// `system` must be a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_pressure_breakdown(
    system: *const CasimirSystem,
    rel_tol: f64,
    out: *mut CasimirBreakdown,
) -> CasimirStatus {
    guard(|| {
        let state = system_ref(system)?;
        let b = pi_total(state, rel_tol).map_err(status_of)?;
        write_out(
            out,
            CasimirBreakdown {
                pi_ion: b.pi_ion,
                pi_em: b.pi_em,
                pi_em_zero_mode: b.pi_em_zero_mode,
                pi_total: b.pi_total,
                matsubara_terms_used: b.matsubara_terms_used as u64,
                truncation_error_estimate: b.truncation_error_estimate,
            },
        )
    })
}

/// Ion pressure, units `T/L³`.
///
/// # Safety
/// `system` must be a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_pi_ion(
    system: *const CasimirSystem,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| write_out(out, pi_ion(system_ref(system)?)))
}

/// Electromagnetic pressure, units `T/L³`.
///
/// # Safety
/// `system` must be a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_pi_em(
    system: *const CasimirSystem,
    rel_tol: f64,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| {
        let em = pi_em(system_ref(system)?, rel_tol).map_err(status_of)?;
        write_out(out, em.value)
    })
}

/// Zero-Matsubara-mode pressure in the given convention, units `T/L³`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_zero_mode(
    convention: CasimirZeroMode,
    out: *mut f64,
) -> CasimirStatus {
    let convention = match convention {
        CasimirZeroMode::Schwinger => ZeroModeConvention::Schwinger,
        CasimirZeroMode::Lifshitz => ZeroModeConvention::Lifshitz,
    };
    guard(|| write_out(out, pi_em_zero_mode(convention)))
}

/// Classical radiation pressure by direct quadrature, units `T/L³`.
///
/// # Safety
/// `system` must be a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_classical_radiation_pressure(
    system: *const CasimirSystem,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| {
        let r = classical_radiation_pressure(system_ref(system)?).map_err(status_of)?;
        write_out(out, r.value)
    })
}

/// Interaction free energy per area, units `T/L²`.
///
/// # Safety
/// `system` must be a live handle; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_interaction_free_energy(
    system: *const CasimirSystem,
    rel_tol: f64,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| {
        let g = interaction_free_energy(system_ref(system)?, rel_tol).map_err(status_of)?;
        write_out(out, g.value)
    })
}

/// `∫_x^∞ y² / (eʸ - 1) dy`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_bose_tail(x: f64, out: *mut f64) -> CasimirStatus {
    guard(|| write_out(out, bose_tail(x).map_err(status_of)?))
}

/// Converts a pressure in units of `T/L³` to pascals.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn casimir_pressure_to_si(
    p_natural: f64,
    gap_m: f64,
    temperature_k: f64,
    out: *mut f64,
) -> CasimirStatus {
    guard(|| write_out(out, pressure_to_si(p_natural, gap_m, temperature_k).map_err(status_of)?))
}

/// Copies the calling thread's last error message into `buffer` (truncated,
/// always nul-terminated when `len > 0`) and returns the length the full
/// message needs including the terminator; 0 when there is no message.
///
/// # Safety
/// `buffer` must be null or valid for `len` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn casimir_last_error_message(buffer: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let slot = slot.borrow();
        let Some(message) = slot.as_ref() else {
            return 0;
        };
        let bytes = message.as_bytes_with_nul();
        if !buffer.is_null() && len > 0 {
            let n = bytes.len().min(len) - 1;
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buffer, n);
            *buffer.add(n) = 0;
        }
        bytes.len()
    })
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn casimir_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
