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

//! Helpers for building random states, unitaries and density matrices
//! from raw float data (so property-test strategies stay simple).

use num_complex::Complex64;
use scrteleport_core::{CMatrix, DensityMatrix, StateVector, UnitaryGate};

/// Normalize raw components into a state vector; `None` when the raw
/// vector is too close to zero.
pub fn state_from_raw(n_qubits: usize, raw: &[(f64, f64)]) -> Option<StateVector> {
    assert_eq!(raw.len(), 1 << n_qubits);
    let norm_sq: f64 = raw.iter().map(|(re, im)| re * re + im * im).sum();
    if norm_sq < 1e-6 {
        return None;
    }
    let scale = 1.0 / norm_sq.sqrt();
    let amps = raw
        .iter()
        .map(|&(re, im)| Complex64::new(re * scale, im * scale))
        .collect();
    StateVector::new(n_qubits, amps).ok()
}

/// Gram-Schmidt a raw complex matrix into a unitary gate; `None` when a
/// column degenerates.
pub fn unitary_from_raw(dim: usize, raw: &[(f64, f64)]) -> Option<UnitaryGate> {
    assert_eq!(raw.len(), dim * dim);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|c| {
            (0..dim)
                .map(|r| Complex64::new(raw[r * dim + c].0, raw[r * dim + c].1))
                .collect()
        })
        .collect();
    for c in 0..dim {
        for prev in 0..c {
            let overlap: Complex64 = cols[prev]
                .iter()
                .zip(&cols[c])
                .map(|(p, v)| p.conj() * v)
                .sum();
            let corrections: Vec<Complex64> = cols[prev].iter().map(|p| overlap * p).collect();
            for (v, correction) in cols[c].iter_mut().zip(corrections) {
                *v -= correction;
            }
        }
        let norm: f64 = cols[c].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            return None;
        }
        for z in &mut cols[c] {
            *z /= norm;
        }
    }
    let mut m = CMatrix::zeros(dim);
    for (c, col) in cols.iter().enumerate() {
        for (r, z) in col.iter().enumerate() {
            m[(r, c)] = *z;
        }
    }
    UnitaryGate::new(m).ok()
}

/// Mix pure states drawn from raw data into a full-rank density matrix.
pub fn density_from_raw(dim: usize, raw: &[(f64, f64)]) -> Option<DensityMatrix> {
    let n_qubits = dim.trailing_zeros() as usize;
    assert_eq!(raw.len() % dim, 0);
    let n_states = raw.len() / dim;
    assert!(n_states >= 1);
    let mut m = CMatrix::zeros(dim);
    let weight = 1.0 / n_states as f64;
    for s in 0..n_states {
        let psi = state_from_raw(n_qubits, &raw[s * dim..(s + 1) * dim])?;
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] +=
                    Complex64::new(weight, 0.0) * psi.amplitude(r) * psi.amplitude(c).conj();
            }
        }
    }
    DensityMatrix::new(m).ok()
}
