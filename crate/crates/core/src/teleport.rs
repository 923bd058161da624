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

//! The 7-qubit scrambling teleportation protocol.
//!
//! Qubit layout (qubit 0 is the most significant index bit):
//!
//! * qubit 0 — the sender's secret qubit,
//! * qubits 1, 2 — scrambled together with qubit 0,
//! * qubits 3, 4 — the measuring party's qubits,
//! * qubits 5, 6 — the receiver's ancilla and output qubits.
//!
//! The initial state is the secret qubit times three Bell pairs wired as
//! (1,4), (2,3) and (5,6). The scrambler acts on wires (0,1,2); its
//! entrywise conjugate acts on wires (5,4,3), mirrored so wire 5 takes
//! the first gate slot. A Bell measurement of one pair — (2,3), (1,4) or
//! (0,5) — then collapses the state, and qubit 6 carries the teleported
//! qubit after an outcome-conditioned Pauli correction.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::density::{fidelity, DensityMatrix};
use crate::error::{Error, Result};
use crate::gate;
use crate::linalg::CMatrix;
use crate::pauli::Pauli;
use crate::report::{FidelityReport, ReportSource};
use crate::scrambler::{partial_scrambler, ScramblerParams};
use crate::state::{bell_state, StateVector, PROB_CUTOFF};

/// Number of protocol qubits.
pub const PROTOCOL_QUBITS: usize = 7;

/// The receiver's output qubit.
pub const OUTPUT_QUBIT: usize = 6;

/// A single-qubit secret `alpha |0> + beta |1>` with real `alpha` in
/// `[0, 1]` and `beta = sqrt(1 - alpha^2) e^{i phi}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecretState {
    alpha: f64,
    phi: f64,
}

impl SecretState {
    pub fn new(alpha: f64, phi: f64) -> Result<Self> {
        crate::error::ensure_finite("alpha", alpha)?;
        crate::error::ensure_finite("phi", phi)?;
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidArgument(format!(
                "alpha = {alpha} outside [0, 1]"
            )));
        }
        Ok(SecretState { alpha, phi })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn beta(&self) -> Complex64 {
        let mag = (1.0 - self.alpha * self.alpha).max(0.0).sqrt();
        Complex64::new(0.0, self.phi).exp() * mag
    }

    /// The secret as a 1-qubit state vector.
    pub fn state(&self) -> StateVector {
        StateVector::new(1, vec![Complex64::new(self.alpha, 0.0), self.beta()])
            .expect("secret amplitudes are normalized by construction")
    }

    /// The pure density matrix of the secret.
    pub fn density(&self) -> DensityMatrix {
        self.state().density()
    }
}

/// Which qubit pair is measured in the Bell basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasurementPair {
    Pair23,
    Pair14,
    Pair05,
}

impl MeasurementPair {
    pub const ALL: [MeasurementPair; 3] = [
        MeasurementPair::Pair23,
        MeasurementPair::Pair14,
        MeasurementPair::Pair05,
    ];

    pub fn qubits(&self) -> (usize, usize) {
        match self {
            MeasurementPair::Pair23 => (2, 3),
            MeasurementPair::Pair14 => (1, 4),
            MeasurementPair::Pair05 => (0, 5),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MeasurementPair::Pair23 => "23",
            MeasurementPair::Pair14 => "14",
            MeasurementPair::Pair05 => "05",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "23" => Ok(MeasurementPair::Pair23),
            "14" => Ok(MeasurementPair::Pair14),
            "05" | "5" => Ok(MeasurementPair::Pair05),
            other => Err(Error::InvalidArgument(format!(
                "unknown measurement pair '{other}' (expected 23, 14 or 05)"
            ))),
        }
    }
}

impl std::fmt::Display for MeasurementPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The Pauli correction the receiver applies for a given outcome,
/// written as a matrix (products apply right-to-left).
///
/// Pairs (2,3)/(1,4): outcomes 0..3 map to I, Z, ZX, X.
/// Pair (0,5): outcomes 0..3 map to I, X, Z, ZX.
pub fn correction_matrix(pair: MeasurementPair, outcome: usize) -> Result<CMatrix> {
    let m = match (pair, outcome) {
        (_, 0) => CMatrix::identity(2),
        (MeasurementPair::Pair23 | MeasurementPair::Pair14, 1) => Pauli::Z.matrix(),
        (MeasurementPair::Pair23 | MeasurementPair::Pair14, 2) => gate::z_then_x(),
        (MeasurementPair::Pair23 | MeasurementPair::Pair14, 3) => Pauli::X.matrix(),
        (MeasurementPair::Pair05, 1) => Pauli::X.matrix(),
        (MeasurementPair::Pair05, 2) => Pauli::Z.matrix(),
        (MeasurementPair::Pair05, 3) => gate::z_then_x(),
        (_, other) => {
            return Err(Error::InvalidArgument(format!(
                "outcome {other} not in 0..=3"
            )))
        }
    };
    Ok(m)
}

/// One Bell-measurement branch: outcome, probability, post-measurement
/// state and the receiver's qubit before and after correction.
///
/// The state fields are `None` when the branch probability vanishes.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub pair: MeasurementPair,
    pub outcome: usize,
    pub probability: f64,
    pub post_state: Option<StateVector>,
    pub bob_raw: Option<DensityMatrix>,
    pub bob_corrected: Option<DensityMatrix>,
}

/// The secret qubit times Bell pairs on (1,4), (2,3) and (5,6).
pub fn build_initial_state(secret: &SecretState) -> StateVector {
    let alpha = Complex64::new(secret.alpha(), 0.0);
    let beta = secret.beta();
    let w = Complex64::new(FRAC_1_SQRT_2.powi(3), 0.0);

    let mut amps = vec![Complex64::ZERO; 1 << PROTOCOL_QUBITS];
    for (s, coef) in [(0usize, alpha), (1usize, beta)] {
        for b14 in 0..2usize {
            for b23 in 0..2usize {
                for b56 in 0..2usize {
                    let idx = (s << 6)
                        | (b14 << 5)
                        | (b23 << 4)
                        | (b23 << 3)
                        | (b14 << 2)
                        | (b56 << 1)
                        | b56;
                    amps[idx] = coef * w;
                }
            }
        }
    }
    StateVector::new(PROTOCOL_QUBITS, amps).expect("initial state is normalized")
}

/// Run the full circuit: prepare the initial state, apply the scrambler
/// on wires (0,1,2) and its entrywise conjugate on wires (5,4,3).
pub fn run_protocol(secret: &SecretState, theta: f64) -> Result<StateVector> {
    let gate = partial_scrambler(ScramblerParams::new(theta)?);
    let state = build_initial_state(secret);
    let state = state.apply_gate(&gate, &[0, 1, 2])?;
    state.apply_gate(&gate.conjugated(), &[5, 4, 3])
}

/// Bell-measure `pair` of a post-protocol state for one fixed outcome.
pub fn measure(
    state: &StateVector,
    pair: MeasurementPair,
    outcome: usize,
) -> Result<MeasurementRecord> {
    if state.n_qubits() != PROTOCOL_QUBITS {
        return Err(Error::InvalidArgument(format!(
            "protocol state must have {PROTOCOL_QUBITS} qubits, got {}",
            state.n_qubits()
        )));
    }
    let projection = state.project_pair(pair.qubits(), outcome)?;
    let correction = correction_matrix(pair, outcome)?;

    let (post_state, bob_raw, bob_corrected) = match projection.state {
        Some(post) => {
            let raw = post.partial_trace(&[OUTPUT_QUBIT])?;
            let corrected = raw.conjugate_by(&correction)?;
            (Some(post), Some(raw), Some(corrected))
        }
        None => (None, None, None),
    };

    Ok(MeasurementRecord {
        pair,
        outcome,
        probability: projection.probability,
        post_state,
        bob_raw,
        bob_corrected,
    })
}

/// Exact-simulation fidelity report: run the circuit, measure all four
/// outcomes and compare the receiver's qubit against the secret with the
/// Uhlmann fidelity.
pub fn circuit_fidelities(
    secret: &SecretState,
    theta: f64,
    pair: MeasurementPair,
) -> Result<FidelityReport> {
    let state = run_protocol(secret, theta)?;
    let rho_secret = secret.density();

    let mut probabilities = [0.0f64; 4];
    let mut fsq_raw = [None; 4];
    let mut fsq_corrected = [None; 4];
    for outcome in 0..4 {
        let record = measure(&state, pair, outcome)?;
        probabilities[outcome] = record.probability;
        if let (Some(raw), Some(corrected)) = (&record.bob_raw, &record.bob_corrected) {
            let fr = fidelity(&rho_secret, raw)?;
            let fc = fidelity(&rho_secret, corrected)?;
            fsq_raw[outcome] = Some(fr * fr);
            fsq_corrected[outcome] = Some(fc * fc);
        }
    }

    Ok(FidelityReport::from_parts(
        theta,
        secret,
        pair,
        ReportSource::Circuit,
        probabilities,
        fsq_raw,
        fsq_corrected,
        None,
        None,
    ))
}

/// One branch of the 3-qubit reference teleportation circuit.
#[derive(Debug, Clone)]
pub struct TeleportBranch {
    /// Measured bits of qubits 0 and 1, packed as `b0 << 1 | b1`.
    pub outcome: usize,
    pub probability: f64,
    /// The receiver's qubit after the outcome's Pauli correction.
    pub bob_corrected: DensityMatrix,
}

/// The plain 3-qubit teleportation circuit, a sanity fixture for the
/// engine: secret on qubit 0, Bell pair on (1,2), basis change by
/// CNOT(0,1) then H(0), computational readout of qubits (0,1) and the
/// I/X/Z/ZX correction on qubit 2. Every corrected branch reproduces
/// the secret exactly.
pub fn standard_teleportation(secret: &SecretState) -> Result<Vec<TeleportBranch>> {
    let state = secret
        .state()
        .tensor(&bell_state(0)?)
        .apply_gate(&gate::cnot(), &[0, 1])?
        .apply_gate(&gate::hadamard(), &[0])?;

    let mut branches = Vec::with_capacity(4);
    for outcome in 0..4usize {
        let projection = state.project_computational(&[0, 1], outcome)?;
        let post = match projection.state {
            Some(post) => post,
            None => continue,
        };
        let raw = post.partial_trace(&[2])?;
        // Outcomes (b0 b1): 00 -> I, 01 -> X, 10 -> Z, 11 -> ZX.
        let correction = match outcome {
            0 => CMatrix::identity(2),
            1 => Pauli::X.matrix(),
            2 => Pauli::Z.matrix(),
            _ => gate::z_then_x(),
        };
        branches.push(TeleportBranch {
            outcome,
            probability: projection.probability,
            bob_corrected: raw.conjugate_by(&correction)?,
        });
    }
    Ok(branches)
}

/// Probability-weighted average of the corrected squared fidelities,
/// with the raw value standing in for outcome 0 (its correction is the
/// identity). Branches below the probability cutoff carry zero weight.
pub(crate) fn weighted_average(
    probabilities: &[f64; 4],
    fsq_raw: &[Option<f64>; 4],
    fsq_corrected: &[Option<f64>; 4],
) -> f64 {
    let mut avg = 0.0;
    for j in 0..4 {
        if probabilities[j] < PROB_CUTOFF {
            continue;
        }
        let fsq = if j == 0 { fsq_raw[j] } else { fsq_corrected[j] };
        if let Some(f) = fsq {
            avg += probabilities[j] * f;
        }
    }
    avg
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn secret() -> SecretState {
        SecretState::new(1.0 / 3.0f64.sqrt(), 0.5).unwrap()
    }

    #[test]
    fn secret_state_validation() {
        assert!(SecretState::new(-0.1, 0.0).is_err());
        assert!(SecretState::new(1.1, 0.0).is_err());
        assert!(SecretState::new(f64::NAN, 0.0).is_err());
        assert!(SecretState::new(0.5, f64::INFINITY).is_err());
        let s = SecretState::new(0.6, 0.25).unwrap();
        assert!((s.beta().norm() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn initial_state_amplitude_and_norm() {
        let s = SecretState::new(1.0, 0.0).unwrap();
        let state = build_initial_state(&s);
        let expect = FRAC_1_SQRT_2.powi(3);
        assert!((state.amplitude(0) - Complex64::new(expect, 0.0)).norm() < 1e-15);
        assert!((state.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_angle_leaves_initial_state() {
        let s = secret();
        let out = run_protocol(&s, 0.0).unwrap();
        assert!(out.max_amp_diff(&build_initial_state(&s)) < 1e-14);
    }

    #[test]
    fn theta_out_of_range_rejected() {
        assert!(run_protocol(&secret(), -0.2).is_err());
        assert!(run_protocol(&secret(), 2.0).is_err());
    }

    #[test]
    fn unscrambled_measurement_is_deterministic() {
        let s = secret();
        let state = run_protocol(&s, 0.0).unwrap();
        let record = measure(&state, MeasurementPair::Pair23, 0).unwrap();
        assert!((record.probability - 1.0).abs() < 1e-12);
        let empty = measure(&state, MeasurementPair::Pair23, 3).unwrap();
        assert!(empty.probability < 1e-14);
        assert!(empty.post_state.is_none() && empty.bob_corrected.is_none());
    }

    #[test]
    fn maximal_scrambling_gives_uniform_outcomes() {
        let s = secret();
        let state = run_protocol(&s, FRAC_PI_2).unwrap();
        for pair in MeasurementPair::ALL {
            for outcome in 0..4 {
                let r = measure(&state, pair, outcome).unwrap();
                assert!((r.probability - 0.25).abs() < 1e-12, "{pair} {outcome}");
            }
        }
    }

    #[test]
    fn full_scrambling_teleports_perfectly() {
        let s = secret();
        let report = circuit_fidelities(&s, FRAC_PI_2, MeasurementPair::Pair05).unwrap();
        assert!((report.favg_sq - 1.0).abs() < 1e-12);
        for f in report.fsq_corrected.iter().flatten() {
            assert!((f - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn post_measurement_state_is_collapsed_and_normalized() {
        let s = secret();
        let state = run_protocol(&s, 0.9).unwrap();
        let record = measure(&state, MeasurementPair::Pair14, 1).unwrap();
        let post = record.post_state.unwrap();
        assert!((post.norm() - 1.0).abs() < 1e-12);
        // The measured pair is now in the Bell state: re-projecting the
        // same outcome is certain, the others impossible.
        for outcome in 0..4 {
            let again = post.project_pair((1, 4), outcome).unwrap();
            let expect = if outcome == 1 { 1.0 } else { 0.0 };
            assert!(
                (again.probability - expect).abs() < 1e-12,
                "outcome {outcome}"
            );
        }
    }

    #[test]
    fn measurement_rejects_bad_inputs() {
        let state = run_protocol(&secret(), 0.4).unwrap();
        assert!(measure(&state, MeasurementPair::Pair23, 4).is_err());
        let small = bell_state(0).unwrap();
        assert!(measure(&small, MeasurementPair::Pair23, 0).is_err());
    }

    #[test]
    fn standard_teleportation_all_branches_exact() {
        let s = secret();
        let branches = standard_teleportation(&s).unwrap();
        assert_eq!(branches.len(), 4);
        let rho = s.density();
        for b in &branches {
            assert!((b.probability - 0.25).abs() < 1e-12);
            let f = fidelity(&rho, &b.bob_corrected).unwrap();
            assert!((f - 1.0).abs() < 1e-12, "outcome {}", b.outcome);
        }
    }

    #[test]
    fn standard_teleportation_of_basis_state() {
        let s = SecretState::new(1.0, 0.0).unwrap();
        for b in standard_teleportation(&s).unwrap() {
            let bloch = b.bob_corrected.bloch_vector().unwrap();
            assert!((bloch.s3 - 1.0).abs() < 1e-12);
        }
    }
}
