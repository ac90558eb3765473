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

//! Casimir disjoining pressure between ideal-conductor plates that enclose
//! a classical ionic plasma.
//!
//! The pressure splits into a repulsive image-charge part [`pi_ion`] and the
//! attractive electromagnetic part [`pi_em`]; their sum is [`pi_total`].
//! Kernels work in natural units with pressures reported in units of
//! `T/L³`; [`medium`] converts physical inputs and results to and from SI.
//! The [`oracle`] module re-derives every closed form by brute-force
//! quadrature of the underlying momentum integrals.

pub mod cli;
pub mod error;
pub mod medium;
pub mod oracle;
pub mod pressure;
pub mod quadrature;
pub mod special_functions;

pub use error::{Error, Result};
pub use medium::{
    classicality_check, debye_kappa, pressure_to_si, to_natural, ClassicalityReport, IonSpecies,
    SystemState, UnitSystem,
};
pub use pressure::{
    classical_radiation_pressure, eigenvalue, interaction_free_energy, pi_em, pi_em_zero_mode,
    pi_ion, pi_ion_asymptotic, pi_total, AsymptoticBranch, Eigenvalue, MatsubaraSum,
    PressureBreakdown, ZeroModeConvention, DEFAULT_REL_TOL,
};
pub use quadrature::Estimate;
pub use special_functions::{bose_tail, bose_tail_quadrature, zeta3, BoseTail, TailMethod};
