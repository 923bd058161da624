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

//! The numerical self-verification suite behind `scrteleport verify`.
//!
//! Every check compares an independently derived quantity (closed-form
//! conjugation tables, the Bell-basis expansion, the analytic fidelity
//! layer) against the computed one and records the worst deviation.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use scrteleport_core::scrambler::single_site_inputs;
use scrteleport_core::{
    analytic, analytic_fidelities, circuit_fidelities, conjugate_pauli, max_scrambler, measure,
    outcome_probabilities, partial_scrambler, reference, run_protocol, CMatrix, Complex64,
    MeasurementPair, ScramblerParams, SecretState, UnitaryGate,
};

use crate::CliError;

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// 33 equally spaced angles covering both endpoints.
pub fn default_grid() -> Vec<f64> {
    (0..33).map(|i| FRAC_PI_2 * (i as f64 / 32.0)).collect()
}

fn check(name: &'static str, max_deviation: f64, tolerance: f64) -> CheckResult {
    CheckResult {
        name,
        max_deviation,
        tolerance,
        passed: max_deviation <= tolerance,
    }
}

/// Secrets used by the protocol-level checks.
fn probe_secrets() -> Vec<SecretState> {
    vec![
        SecretState::new(1.0 / 3.0f64.sqrt(), 0.0).expect("valid"),
        SecretState::new(0.3, 0.9).expect("valid"),
        SecretState::new(0.8, 2.2).expect("valid"),
    ]
}

/// The maximal scrambler, optionally with one entry corrupted so the
/// conjugation checks have a negative control.
fn scrambler_under_test(corrupt: bool) -> UnitaryGate {
    let gate = max_scrambler();
    if !corrupt {
        return gate;
    }
    let mut m = gate.matrix().clone();
    m[(0, 0)] += Complex64::new(1e-3, 0.0);
    UnitaryGate::new_unchecked(m)
}

pub fn run_verification(grid: &[f64], corrupt: bool) -> Result<VerifyReport, CliError> {
    if grid.is_empty() {
        return Err(CliError::Usage("verify needs at least one angle".into()));
    }
    for &theta in grid {
        ScramblerParams::new(theta).map_err(|e| CliError::Usage(format!("verify grid: {e}")))?;
    }
    let max_u = scrambler_under_test(corrupt);
    let mut checks = Vec::new();

    // Unitarity of the deformation across the grid.
    let mut dev = 0.0f64;
    for &theta in grid {
        let u = partial_scrambler(ScramblerParams::new(theta)?);
        dev = dev.max(u.unitarity_defect());
    }
    checks.push(check("partial-scrambler-unitarity", dev, 1e-12));

    // Identity at zero, the maximal scrambler at pi/2, entrywise.
    let mut dev = partial_scrambler(ScramblerParams::new(0.0)?)
        .matrix()
        .max_abs_diff(&CMatrix::identity(8));
    dev = dev.max(
        partial_scrambler(ScramblerParams::new(FRAC_PI_2)?)
            .matrix()
            .max_abs_diff(max_u.matrix()),
    );
    checks.push(check("endpoint-identity", dev, 1e-12));

    // Single-word conjugation table of the maximal scrambler.
    let mut dev = 0.0f64;
    for (input, output, coeff) in reference::max_scrambler_conjugations() {
        let e = conjugate_pauli(&max_u, &input)?;
        dev = dev.max((e.coefficient(&output) - Complex64::new(coeff, 0.0)).norm());
        // Any weight outside the single expected word counts as deviation.
        let spurious: f64 = e
            .terms()
            .iter()
            .filter(|(q, _)| **q != output)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max);
        dev = dev.max(spurious);
    }
    checks.push(check("eq3-pauli-conjugation", dev, 1e-12));

    // Closed-form conjugation expansions of the deformation.
    let mut dev = 0.0f64;
    let mut expansion_angles: Vec<f64> = vec![0.1, 0.3, 0.7, 1.2, FRAC_PI_2];
    expansion_angles.extend_from_slice(grid);
    for &theta in &expansion_angles {
        let u = partial_scrambler(ScramblerParams::new(theta)?);
        for input in single_site_inputs() {
            let numeric = conjugate_pauli(&u, &input)?;
            let formula = reference::partial_scrambler_conjugation(theta, &input)?;
            dev = dev.max(numeric.max_coefficient_diff(&formula));
        }
    }
    checks.push(check("conjugation-closed-form", dev, 1e-10));

    // Conjugation preserves Frobenius weight.
    let mut dev = 0.0f64;
    for &theta in grid {
        let u = partial_scrambler(ScramblerParams::new(theta)?);
        for input in single_site_inputs() {
            dev = dev.max((conjugate_pauli(&u, &input)?.weight_sum() - 1.0).abs());
        }
    }
    checks.push(check("expansion-normalization", dev, 1e-10));

    // Outcome probabilities form a distribution.
    let mut dev = 0.0f64;
    for &theta in grid {
        for pair in MeasurementPair::ALL {
            let total: f64 = outcome_probabilities(pair, theta)?.iter().sum();
            dev = dev.max((total - 1.0).abs());
        }
    }
    checks.push(check("probability-completeness", dev, 1e-12));

    // The Bell-basis expansion reproduces the circuit state.
    let mut dev = 0.0f64;
    for secret in probe_secrets() {
        for &theta in grid {
            let circuit = run_protocol(&secret, theta)?;
            let expansion = reference::protocol_state_expansion(&secret, theta)?;
            dev = dev.max(circuit.max_amp_diff(&expansion));
        }
    }
    checks.push(check("bell-basis-expansion", dev, 1e-10));

    // Closed-form and simulated reports agree field by field.
    let mut dev = 0.0f64;
    for secret in probe_secrets() {
        for &theta in grid {
            for pair in MeasurementPair::ALL {
                let a = analytic_fidelities(&secret, theta, pair)?;
                let c = circuit_fidelities(&secret, theta, pair)?;
                dev = dev.max(a.max_field_diff(&c));
            }
        }
    }
    checks.push(check("oracle-equivalence", dev, 1e-9));

    // The two interchangeable measurement pairs give identical reports.
    let mut dev = 0.0f64;
    for secret in probe_secrets() {
        for &theta in grid {
            let a = circuit_fidelities(&secret, theta, MeasurementPair::Pair23)?;
            let b = circuit_fidelities(&secret, theta, MeasurementPair::Pair14)?;
            dev = dev.max(a.max_field_diff(&b));
        }
    }
    checks.push(check("pair-equivalence", dev, 1e-10));

    // Closed-form Bloch vectors match the traced-out receiver qubit.
    let mut dev = 0.0f64;
    for secret in probe_secrets() {
        for &theta in grid {
            let state = run_protocol(&secret, theta)?;
            for pair in MeasurementPair::ALL {
                for outcome in 0..4 {
                    let record = measure(&state, pair, outcome)?;
                    let Some(raw) = record.bob_raw else { continue };
                    let circuit = raw.bloch_vector()?;
                    let formula = analytic::bob_bloch_raw(&secret, theta, pair, outcome)?;
                    dev = dev.max(circuit.max_component_diff(&formula));
                }
            }
        }
    }
    checks.push(check("bloch-table-agreement", dev, 1e-9));

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { passed, checks })
}
