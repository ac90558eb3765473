/*
 * Copyright 2026 The casimir-screening developers
 *
 * Licensed under the Apache license, version 2.0 (the "license");
 * you may not use this file except in compliance with the license.
 * You may obtain a copy of the license at
 *
 *     http://www.apache.org/licenses/license-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the license is distributed on an "as is" basis,
 * without warranties or conditions of any kind, either express or implied.
 * See the license for the specific language governing permissions and
 * limitations under the license.
 */

#ifndef CASIMIR_H
#define CASIMIR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum CasimirStatus {
  CASIMIR_STATUS_OK = 0,
  // A required pointer argument was null.
  CASIMIR_STATUS_NULL_POINTER = 1,
  // An argument lies outside the domain of the function.
  CASIMIR_STATUS_DOMAIN = 2,
  // Physical input violates a model constraint.
  CASIMIR_STATUS_VALIDATION = 3,
  // A sum or integral did not reach its tolerance.
  CASIMIR_STATUS_CONVERGENCE = 4,
  // The library panicked; this is a bug.
  CASIMIR_STATUS_PANIC = 5,
} CasimirStatus;

typedef enum CasimirZeroMode {
  CASIMIR_ZERO_MODE_SCHWINGER = 0,
  CASIMIR_ZERO_MODE_LIFSHITZ = 1,
} CasimirZeroMode;

// Opaque system state (temperature, gap width, inverse Debye length in
// natural units).
typedef struct CasimirSystem CasimirSystem;

// Pressure decomposition in units of `T/L³`.
typedef struct CasimirBreakdown {
  double pi_ion;
  double pi_em;
  double pi_em_zero_mode;
  double pi_total;
  uint64_t matsubara_terms_used;
  double truncation_error_estimate;
} CasimirBreakdown;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a state from natural-unit temperature, gap width and inverse
// Debye length.
//
// # Safety
// `out` must be null or valid for writes.
enum CasimirStatus casimir_system_new(double temperature,
                                      double gap,
                                      double kappa,
                                      struct CasimirSystem **out);

// Creates a state from kelvin, metres and inverse metres. Lengths are
// measured in units of the gap afterwards.
//
// # Safety
// `out` must be null or valid for writes.
enum CasimirStatus casimir_system_new_si(double temperature_k,
                                         double gap_m,
                                         double kappa_per_m,
                                         struct CasimirSystem **out);

// Releases a state. Null is ignored.
//
// # Safety
// `system` must be null or a handle from `casimir_system_new*` that has not
// been freed.
void casimir_system_free(struct CasimirSystem *system);

// Writes the dimensionless groups `TL` and `κL`.
//
// # Safety
// `system` must be a live handle; the out-pointers null or writable.
enum CasimirStatus casimir_system_dimensionless(const struct CasimirSystem *system,
                                                double *temperature_gap,
                                                double *kappa_gap);

// Full pressure decomposition.
//
// # Safety
// `system` must be a live handle; `out` null or writable.
enum CasimirStatus casimir_pressure_breakdown(const struct CasimirSystem *system,
                                              double rel_tol,
                                              struct CasimirBreakdown *out);

// Ion pressure, units `T/L³`.
//
// # Safety
// `system` must be a live handle; `out` null or writable.
enum CasimirStatus casimir_pi_ion(const struct CasimirSystem *system, double *out);

// Electromagnetic pressure, units `T/L³`.
//
// # Safety
// `system` must be a live handle; `out` null or writable.
enum CasimirStatus casimir_pi_em(const struct CasimirSystem *system, double rel_tol, double *out);

// Zero-Matsubara-mode pressure in the given convention, units `T/L³`.
//
// # Safety
// `out` must be null or writable.
enum CasimirStatus casimir_zero_mode(enum CasimirZeroMode convention, double *out);

// Classical radiation pressure by direct quadrature, units `T/L³`.
//
// # Safety
// `system` must be a live handle; `out` null or writable.
enum CasimirStatus casimir_classical_radiation_pressure(const struct CasimirSystem *system,
                                                        double *out);

// Interaction free energy per area, units `T/L²`.
//
// # Safety
// `system` must be a live handle; `out` null or writable.
enum CasimirStatus casimir_interaction_free_energy(const struct CasimirSystem *system,
                                                   double rel_tol,
                                                   double *out);

// `∫_x^∞ y² / (eʸ - 1) dy`.
//
// # Safety
// `out` must be null or writable.
enum CasimirStatus casimir_bose_tail(double x, double *out);

// Converts a pressure in units of `T/L³` to pascals.
//
// # Safety
// `out` must be null or writable.
enum CasimirStatus casimir_pressure_to_si(double p_natural,
                                          double gap_m,
                                          double temperature_k,
                                          double *out);

// Copies the calling thread's last error message into `buffer` (truncated,
// always nul-terminated when `len > 0`) and returns the length the full
// message needs including the terminator; 0 when there is no message.
//
// # Safety
// `buffer` must be null or valid for `len` bytes of writes.
size_t casimir_last_error_message(char *buffer, size_t len);

// Library version as a static nul-terminated string.
const char *casimir_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CASIMIR_H */
