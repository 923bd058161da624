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

//! Unitary gates on k qubits.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::pauli::Pauli;

/// Tolerance for the `U U^dag = I` validity check.
pub const UNITARITY_TOL: f64 = 1e-10;

/// A k-qubit gate held as its dense 2^k x 2^k matrix.
///
/// Construction checks unitarity, so a value of this type can always be
/// applied without renormalizing the state.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryGate {
    k_qubits: usize,
    matrix: CMatrix,
}

impl UnitaryGate {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.dim();
        if dim == 0 || !dim.is_power_of_two() || dim == 1 {
            return Err(Error::InvalidArgument(format!(
                "gate dimension {dim} is not 2^k for k >= 1"
            )));
        }
        let defect = matrix.unitarity_defect();
        if defect > UNITARITY_TOL {
            return Err(Error::InvalidState(format!(
                "matrix is not unitary (defect {defect:.3e})"
            )));
        }
        Ok(UnitaryGate {
            k_qubits: dim.trailing_zeros() as usize,
            matrix,
        })
    }

    /// Skip the unitarity check. Intended for verification tooling that
    /// deliberately injects faults; everything else should use [`new`].
    ///
    /// [`new`]: UnitaryGate::new
    pub fn new_unchecked(matrix: CMatrix) -> Self {
        let dim = matrix.dim();
        assert!(dim.is_power_of_two() && dim > 1);
        UnitaryGate {
            k_qubits: dim.trailing_zeros() as usize,
            matrix,
        }
    }

    pub fn k_qubits(&self) -> usize {
        self.k_qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Entrywise complex conjugate of the gate (itself unitary).
    pub fn conjugated(&self) -> Self {
        UnitaryGate {
            k_qubits: self.k_qubits,
            matrix: self.matrix.conjugate(),
        }
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.matrix.unitarity_defect()
    }
}

pub fn identity_gate(k_qubits: usize) -> UnitaryGate {
    UnitaryGate::new_unchecked(CMatrix::identity(1 << k_qubits))
}

pub fn pauli_gate(p: Pauli) -> UnitaryGate {
    UnitaryGate::new_unchecked(p.matrix())
}

pub fn hadamard() -> UnitaryGate {
    let h = FRAC_1_SQRT_2;
    UnitaryGate::new_unchecked(CMatrix::from_real(2, &[h, h, h, -h]).unwrap())
}

/// CNOT with the gate's first wire as control.
pub fn cnot() -> UnitaryGate {
    #[rustfmt::skip]
    let m = CMatrix::from_real(4, &[
        1.0, 0.0, 0.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 1.0, 0.0,
    ]).unwrap();
    UnitaryGate::new_unchecked(m)
}

pub fn swap() -> UnitaryGate {
    #[rustfmt::skip]
    let m = CMatrix::from_real(4, &[
        1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
    ]).unwrap();
    UnitaryGate::new_unchecked(m)
}

/// Product `ZX` applied as X first, then Z (the two-bit correction).
pub fn z_then_x() -> CMatrix {
    Pauli::Z.matrix().mul(&Pauli::X.matrix())
}
