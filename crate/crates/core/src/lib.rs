// Copyright 2026 The scrteleport developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact simulation and closed-form analysis of a 7-qubit scrambling
//! teleportation protocol.
//!
//! A single-qubit secret is teleported through three Bell pairs after a
//! 3-qubit scrambling unitary (and its complex conjugate) act on the two
//! halves of the circuit. The crate provides:
//!
//! * dense statevector simulation with gates on arbitrary wire subsets,
//!   Bell projections, partial traces and Uhlmann fidelity ([`state`],
//!   [`gate`], [`density`]);
//! * the scrambling unitaries and Pauli-conjugation diagnostics
//!   ([`scrambler`], [`pauli`]);
//! * the protocol itself plus its closed-form probability and fidelity
//!   layer, each an independent oracle for the other ([`teleport`],
//!   [`analytic`], [`report`]);
//! * seeded shot sampling ([`shots`]) and standalone cross-check
//!   evaluators ([`mod@reference`]).
//!
//! Amplitude indices put qubit 0 in the most significant bit, so basis
//! labels read left to right: index 0b1000000 of a 7-qubit state is
//! `|1000000>` with qubit 0 set.

pub mod analytic;
pub mod density;
pub mod error;
pub mod gate;
pub mod linalg;
pub mod pauli;
pub mod reference;
pub mod report;
pub mod scrambler;
pub mod shots;
pub mod state;
pub mod teleport;

pub use num_complex::Complex64;

pub use analytic::{
    analytic_coefficients, analytic_fidelities, outcome_probabilities, AnalyticCoefficients,
};
pub use density::{fidelity, BlochVector, DensityMatrix};
pub use error::{Error, Result};
pub use gate::UnitaryGate;
pub use linalg::CMatrix;
pub use pauli::{conjugate_pauli, Pauli, PauliExpansion, PauliString};
pub use report::{FidelityReport, ReportSource};
pub use scrambler::{
    max_scrambler, partial_scrambler, scrambling_report, ScramblerParams, ScramblingReport,
};
pub use shots::shot_experiment;
pub use state::{bell_state, Projection, StateVector};
pub use teleport::{
    build_initial_state, circuit_fidelities, measure, run_protocol, standard_teleportation,
    MeasurementPair, MeasurementRecord, SecretState, TeleportBranch,
};
