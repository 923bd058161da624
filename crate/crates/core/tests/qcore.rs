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

//! Property tests for the statevector and density-matrix layer.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use scrteleport_core::{fidelity, gate};

fn raw_components(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gates_preserve_norm(
        state_raw in raw_components(16),
        gate_raw in raw_components(16),
        wire_a in 0usize..4,
        wire_b in 0usize..4,
    ) {
        prop_assume!(wire_a != wire_b);
        let state = common::state_from_raw(4, &state_raw);
        let gate = common::unitary_from_raw(4, &gate_raw);
        prop_assume!(state.is_some() && gate.is_some());
        let out = state.unwrap().apply_gate(&gate.unwrap(), &[wire_a, wire_b]).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn swap_gate_relabels_amplitudes(
        state_raw in raw_components(8),
        pair in prop::sample::select(vec![(0usize, 1usize), (0, 2), (1, 2)]),
    ) {
        let state = common::state_from_raw(3, &state_raw);
        prop_assume!(state.is_some());
        let state = state.unwrap();
        let (a, b) = pair;
        let swapped = state.apply_gate(&gate::swap(), &[a, b]).unwrap();

        let sa = 2 - a;
        let sb = 2 - b;
        for i in 0..8usize {
            let ba = (i >> sa) & 1;
            let bb = (i >> sb) & 1;
            let j = (i & !(1 << sa) & !(1 << sb)) | (bb << sa) | (ba << sb);
            prop_assert!((swapped.amplitude(i) - state.amplitude(j)).norm() < 1e-12);
        }
    }

    #[test]
    fn reversed_wires_equal_swap_conjugated_gate(
        state_raw in raw_components(8),
        gate_raw in raw_components(16),
    ) {
        let state = common::state_from_raw(3, &state_raw);
        let g = common::unitary_from_raw(4, &gate_raw);
        prop_assume!(state.is_some() && g.is_some());
        let state = state.unwrap();
        let g = g.unwrap();

        let reversed = state.apply_gate(&g, &[2, 0]).unwrap();
        let swap = gate::swap();
        let conjugated = scrteleport_core::UnitaryGate::new(
            swap.matrix().mul(g.matrix()).mul(swap.matrix()),
        )
        .unwrap();
        let direct = state.apply_gate(&conjugated, &[0, 2]).unwrap();
        prop_assert!(reversed.max_amp_diff(&direct) < 1e-12);
    }

    #[test]
    fn partial_trace_has_unit_trace(
        state_raw in raw_components(16),
        keep in prop::sample::select(vec![vec![0usize], vec![3], vec![1, 2], vec![3, 0]]),
    ) {
        let state = common::state_from_raw(4, &state_raw);
        prop_assume!(state.is_some());
        let rho = state.unwrap().partial_trace(&keep).unwrap();
        let trace = rho.matrix().trace();
        prop_assert!((trace.re - 1.0).abs() < 1e-12 && trace.im.abs() < 1e-12);
    }

    #[test]
    fn bell_projection_probabilities_are_complete(
        state_raw in raw_components(16),
        pair in prop::sample::select(vec![(0usize, 1usize), (1, 3), (2, 0)]),
    ) {
        let state = common::state_from_raw(4, &state_raw);
        prop_assume!(state.is_some());
        let state = state.unwrap();
        let total: f64 = (0..4)
            .map(|o| state.project_pair(pair, o).unwrap().probability)
            .sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_is_symmetric(
        raw_a in raw_components(8),
        raw_b in raw_components(8),
    ) {
        let rho = common::density_from_raw(2, &raw_a);
        let sigma = common::density_from_raw(2, &raw_b);
        prop_assume!(rho.is_some() && sigma.is_some());
        let rho = rho.unwrap();
        let sigma = sigma.unwrap();
        let f_ab = fidelity(&rho, &sigma).unwrap();
        let f_ba = fidelity(&sigma, &rho).unwrap();
        prop_assert!((f_ab - f_ba).abs() < 1e-10);
        prop_assert!((0.0..=1.0).contains(&f_ab));
    }
}

#[test]
fn fidelity_symmetry_on_four_dimensional_mixtures() {
    // A couple of fixed 4x4 mixed-state pairs exercising the general
    // eigendecomposition path at higher dimension.
    let raw_a: Vec<(f64, f64)> = (0..12)
        .map(|i| ((i as f64 * 0.37).sin(), (i as f64 * 0.73).cos()))
        .collect();
    let raw_b: Vec<(f64, f64)> = (0..12)
        .map(|i| ((i as f64 * 0.19 + 1.0).cos(), (i as f64 * 0.41).sin()))
        .collect();
    let rho = common::density_from_raw(4, &raw_a).unwrap();
    let sigma = common::density_from_raw(4, &raw_b).unwrap();
    let f_ab = fidelity(&rho, &sigma).unwrap();
    let f_ba = fidelity(&sigma, &rho).unwrap();
    assert!((f_ab - f_ba).abs() < 1e-10, "{f_ab} vs {f_ba}");
}

#[test]
fn pure_mixed_fidelity_is_order_independent() {
    let psi = common::state_from_raw(1, &[(0.6, 0.1), (-0.3, 0.72)]).unwrap();
    let rho = psi.density();
    let sigma =
        common::density_from_raw(2, &[(0.2, 0.5), (0.8, -0.1), (0.9, 0.0), (0.1, 0.4)]).unwrap();
    let forward = fidelity(&rho, &sigma).unwrap();
    let backward = fidelity(&sigma, &rho).unwrap();
    assert!((forward - backward).abs() < 1e-12);
    let overlap: f64 = sigma.expectation(psi.amplitudes()).unwrap();
    assert!((forward - overlap.sqrt()).abs() < 1e-12);
}

#[test]
fn three_qubit_gate_on_scattered_wires_preserves_norm() {
    let raw: Vec<(f64, f64)> = (0..32)
        .map(|i| ((i as f64 * 0.13).sin(), (i as f64 * 0.29).cos()))
        .collect();
    let state = common::state_from_raw(5, &raw).unwrap();
    let u = scrteleport_core::max_scrambler();
    for wires in [[0usize, 2, 4], [4, 1, 0], [3, 2, 1]] {
        let out = state.apply_gate(&u, &wires).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn bell_gram_matrix_is_identity() {
    for i in 0..4 {
        for j in 0..4 {
            let ip = scrteleport_core::bell_state(i)
                .unwrap()
                .inner(&scrteleport_core::bell_state(j).unwrap())
                .unwrap();
            let expect = if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            };
            assert!((ip - expect).norm() < 1e-15);
        }
    }
}
