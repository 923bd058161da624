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

//! Acceptance suite: every release criterion as one test, each printing
//! a pass line with the measured margin (run with `--nocapture` to see
//! them). Expected values are frozen from the published reference
//! tables; tolerances are pinned in the asserts.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scrteleport_core::scrambler::single_site_inputs;
use scrteleport_core::{
    analytic_fidelities, circuit_fidelities, conjugate_pauli, fidelity, max_scrambler,
    partial_scrambler, reference, run_protocol, shot_experiment, standard_teleportation, Complex64,
    MeasurementPair, ScramblerParams, SecretState,
};

/// Published theory column: theta 0.1..1.5, middle pair, alpha = 1/sqrt(3), phi = 0.
const TABLE4_THEORY: [f64; 15] = [
    0.50865, 0.53186, 0.56276, 0.59347, 0.61871, 0.63794, 0.65532, 0.67737, 0.70980, 0.75483,
    0.81011, 0.86950, 0.92494, 0.96861, 0.99446,
];

/// Published theory column: phi 0.5..3.5 at theta = pi/4, middle pair.
const TABLE5_THEORY: [f64; 7] = [
    0.66084, 0.63427, 0.61833, 0.62768, 0.65371, 0.67251, 0.66678,
];

/// Published theory column: theta 0.1..1.5, outer pair.
const TABLE6_THEORY: [f64; 15] = [
    0.990132, 0.962036, 0.919754, 0.868720, 0.814669, 0.763203, 0.720053, 0.691416, 0.683556,
    0.701174, 0.744949, 0.809426, 0.882660, 0.948429, 0.990640,
];

/// Published theory column: phi 0.5..3.5 at theta = pi/3, outer pair.
const TABLE7_THEORY: [f64; 7] = [
    0.737904, 0.777756, 0.801666, 0.787652, 0.748597, 0.720410, 0.729004,
];

fn canonical_secret() -> SecretState {
    SecretState::new(1.0 / 3.0f64.sqrt(), 0.0).unwrap()
}

fn theta_set() -> Vec<f64> {
    let mut set: Vec<f64> = (0..=15).map(|i| i as f64 * 0.1).collect();
    set.extend([FRAC_PI_4, FRAC_PI_3, FRAC_PI_2]);
    set
}

fn secret_set() -> Vec<SecretState> {
    vec![
        canonical_secret(),
        SecretState::new(0.3, 0.9).unwrap(),
        SecretState::new(0.8, 2.2).unwrap(),
        SecretState::new(1.0, 0.0).unwrap(),
    ]
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/paper-tables")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn criterion_01_theta_table_reproduction_middle_pair() {
    let start = Instant::now();
    let secret = canonical_secret();
    let mut worst = 0.0f64;
    for (i, expect) in TABLE4_THEORY.iter().enumerate() {
        let theta = (i + 1) as f64 * 0.1;
        let favg = analytic_fidelities(&secret, theta, MeasurementPair::Pair23)
            .unwrap()
            .favg_sq;
        worst = worst.max((favg - expect).abs());
    }
    let elapsed = start.elapsed();
    assert!(worst <= 5e-5, "worst deviation {worst:.2e}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "[acceptance] criterion 1 (theta-table, middle pair): PASS \
         (worst dev {worst:.2e}, {elapsed:?})"
    );
}

#[test]
fn criterion_02_phi_table_reproduction_middle_pair() {
    let mut worst = 0.0f64;
    for (i, expect) in TABLE5_THEORY.iter().enumerate() {
        let phi = (i + 1) as f64 * 0.5;
        let secret = SecretState::new(1.0 / 3.0f64.sqrt(), phi).unwrap();
        let favg = analytic_fidelities(&secret, FRAC_PI_4, MeasurementPair::Pair23)
            .unwrap()
            .favg_sq;
        worst = worst.max((favg - expect).abs());
    }
    assert!(worst <= 5e-5, "worst deviation {worst:.2e}");
    println!("[acceptance] criterion 2 (phi-table, middle pair): PASS (worst dev {worst:.2e})");
}

#[test]
fn criterion_03_outer_pair_tables_reproduction() {
    let mut worst = 0.0f64;
    for (i, expect) in TABLE6_THEORY.iter().enumerate() {
        let theta = (i + 1) as f64 * 0.1;
        let favg = analytic_fidelities(&canonical_secret(), theta, MeasurementPair::Pair05)
            .unwrap()
            .favg_sq;
        worst = worst.max((favg - expect).abs());
    }
    for (i, expect) in TABLE7_THEORY.iter().enumerate() {
        let phi = (i + 1) as f64 * 0.5;
        let secret = SecretState::new(1.0 / 3.0f64.sqrt(), phi).unwrap();
        let favg = analytic_fidelities(&secret, FRAC_PI_3, MeasurementPair::Pair05)
            .unwrap()
            .favg_sq;
        worst = worst.max((favg - expect).abs());
    }
    // Near-1 endpoints of the theta sweep.
    let first = analytic_fidelities(&canonical_secret(), 0.1, MeasurementPair::Pair05)
        .unwrap()
        .favg_sq;
    let last = analytic_fidelities(&canonical_secret(), 1.5, MeasurementPair::Pair05)
        .unwrap()
        .favg_sq;
    worst = worst
        .max((first - 0.990132).abs())
        .max((last - 0.990640).abs());
    assert!(worst <= 5e-6, "worst deviation {worst:.2e}");
    println!("[acceptance] criterion 3 (outer-pair tables): PASS (worst dev {worst:.2e})");
}

#[test]
fn criterion_04_maximal_scrambling_conjugation_table() {
    let u = max_scrambler();
    let mut worst = 0.0f64;
    for (input, output, coeff) in reference::max_scrambler_conjugations() {
        let e = conjugate_pauli(&u, &input).unwrap();
        assert_eq!(e.num_terms(), 1, "{input} is not a single term");
        worst = worst.max((e.coefficient(&output) - Complex64::new(coeff, 0.0)).norm());
    }
    assert!(worst <= 1e-12, "worst deviation {worst:.2e}");
    println!("[acceptance] criterion 4 (single-word conjugations): PASS (worst dev {worst:.2e})");
}

#[test]
fn criterion_05_partial_scrambling_expansions() {
    let mut worst = 0.0f64;
    for &theta in &[0.1, 0.3, 0.7, 1.2, FRAC_PI_2] {
        let u = partial_scrambler(ScramblerParams::new(theta).unwrap());
        for input in single_site_inputs() {
            let numeric = conjugate_pauli(&u, &input).unwrap();
            let formula = reference::partial_scrambler_conjugation(theta, &input).unwrap();
            worst = worst.max(numeric.max_coefficient_diff(&formula));
        }
    }
    assert!(worst <= 1e-10, "worst deviation {worst:.2e}");
    println!(
        "[acceptance] criterion 5 (partial-scrambler expansions): PASS \
         (worst dev {worst:.2e}, no printed-coefficient exceptions needed)"
    );
}

#[test]
fn criterion_06_closed_form_vs_simulation_equivalence() {
    let mut report_dev = 0.0f64;
    let mut state_dev = 0.0f64;
    let mut triples = 0usize;
    for secret in secret_set() {
        for &theta in &theta_set() {
            triples += 1;
            state_dev = state_dev.max(
                run_protocol(&secret, theta)
                    .unwrap()
                    .max_amp_diff(&reference::protocol_state_expansion(&secret, theta).unwrap()),
            );
            for pair in MeasurementPair::ALL {
                let a = analytic_fidelities(&secret, theta, pair).unwrap();
                let c = circuit_fidelities(&secret, theta, pair).unwrap();
                report_dev = report_dev.max(a.max_field_diff(&c));
            }
        }
    }
    assert!(triples >= 50, "only {triples} triples");
    assert!(report_dev <= 1e-9, "report deviation {report_dev:.2e}");
    assert!(state_dev <= 1e-10, "state deviation {state_dev:.2e}");
    println!(
        "[acceptance] criterion 6 (oracle equivalence, {triples} triples x 3 pairs): PASS \
         (reports {report_dev:.2e}, states {state_dev:.2e})"
    );
}

#[test]
fn criterion_07_perfect_teleportation_endpoints() {
    let secret = canonical_secret();
    for pair in MeasurementPair::ALL {
        let favg = analytic_fidelities(&secret, FRAC_PI_2, pair)
            .unwrap()
            .favg_sq;
        assert!((favg - 1.0).abs() <= 1e-9, "{pair} at pi/2: {favg}");
    }
    let outer = analytic_fidelities(&secret, 0.0, MeasurementPair::Pair05)
        .unwrap()
        .favg_sq;
    assert!((outer - 1.0).abs() <= 1e-9, "outer pair at 0: {outer}");
    let middle = analytic_fidelities(&secret, 0.0, MeasurementPair::Pair23)
        .unwrap()
        .favg_sq;
    assert!((middle - 0.5).abs() <= 1e-9, "middle pair at 0: {middle}");
    println!("[acceptance] criterion 7 (endpoint fidelities): PASS");
}

#[test]
fn criterion_08_middle_pairs_interchangeable() {
    let mut worst = 0.0f64;
    for secret in secret_set() {
        for &theta in &theta_set() {
            let a = circuit_fidelities(&secret, theta, MeasurementPair::Pair23).unwrap();
            let b = circuit_fidelities(&secret, theta, MeasurementPair::Pair14).unwrap();
            worst = worst.max(a.max_field_diff(&b));
        }
    }
    assert!(worst <= 1e-10, "worst deviation {worst:.2e}");
    println!("[acceptance] criterion 8 (pair equivalence): PASS (worst dev {worst:.2e})");
}

#[test]
fn criterion_09_shot_statistics_and_published_error_metrics() {
    // Sampled averages concentrate on the closed-form value.
    let secret = canonical_secret();
    let reference_value = 0.99446;
    let mut sum = 0.0;
    let mut within_band = 0usize;
    let seeds = 100u64;
    for seed in 0..seeds {
        let favg = shot_experiment(&secret, 1.5, MeasurementPair::Pair23, 1000, seed)
            .unwrap()
            .favg_sq;
        sum += favg;
        if (favg - reference_value).abs() <= 0.03 {
            within_band += 1;
        }
    }
    let mean = sum / seeds as f64;
    assert!((mean - reference_value).abs() <= 0.01, "mean {mean}");
    assert!(within_band >= 95, "only {within_band}/100 within 0.03");

    // The published per-table error metrics, recomputed from the shipped
    // fixtures through the error command. One summary cell (outer-pair
    // theta table vs the second hardware column) is printed as 0.329 in
    // the reference, but the published per-row data in that very table
    // give 0.3335; the recomputed value is asserted and the mismatch
    // documented here.
    let cases: [(&str, &str, f64); 8] = [
        ("table4.csv", "qiskit", 0.225),
        ("table4.csv", "ibm_oslo", 0.219),
        ("table5.csv", "qiskit", 0.190),
        ("table5.csv", "ibm_oslo", 0.114),
        ("table6.csv", "qiskit", 0.279),
        ("table6.csv", "ibm_oslo", 0.3335), // published summary says 0.329
        ("table7.csv", "qiskit", 0.360),
        ("table7.csv", "ibm_oslo", 0.401),
    ];
    for (table, column, expect) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_scrteleport"))
            .args([
                "error",
                &fixture(table),
                &fixture(table),
                "--experiment-column",
                column,
                "--json",
            ])
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0));
        let summary: serde_json::Value = serde_json::from_slice(&out.stdout).expect("summary json");
        let abs = summary["mean_abs_pct"].as_f64().unwrap();
        assert!(
            (abs - expect).abs() < 5e-4,
            "{table}/{column}: got {abs:.4}, expected {expect}"
        );
    }
    println!(
        "[acceptance] criterion 9 (shot statistics + fixture error metrics): PASS \
         (mean {mean:.5}, {within_band}/100 in band; table6/ibm_oslo recomputed as 0.3335 \
         where the published summary prints 0.329)"
    );
}

#[test]
fn criterion_10_reference_teleportation_circuit() {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let alpha: f64 = rng.random::<f64>();
        let phi: f64 = rng.random::<f64>() * std::f64::consts::TAU;
        let secret = SecretState::new(alpha, phi).unwrap();
        let rho = secret.density();
        let branches = standard_teleportation(&secret).unwrap();
        assert_eq!(branches.len(), 4);
        for branch in branches {
            let f = fidelity(&rho, &branch.bob_corrected).unwrap();
            worst = worst.max((f - 1.0).abs());
        }
    }
    assert!(worst <= 1e-12, "worst fidelity defect {worst:.2e}");
    println!(
        "[acceptance] criterion 10 (reference teleportation circuit): PASS \
         (worst defect {worst:.2e})"
    );
}
