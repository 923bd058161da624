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

//! Density matrices, Uhlmann fidelity and Bloch vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::pauli::Pauli;

/// Tolerance for hermiticity and unit-trace validity checks.
pub const DENSITY_TOL: f64 = 1e-10;

/// Eigenvalues in `[-DENSITY_TOL, 0)` are treated as floating-point noise
/// and clamped to zero; anything more negative is rejected.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Purity above which a state is treated as pure and the closed-form
/// fidelity `sqrt(<psi|sigma|psi>)` is used.
pub const PURITY_PURE: f64 = 1.0 - 1e-10;

/// Hermitian, positive semidefinite, trace-one matrix of power-of-two
/// dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.dim();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "density matrix dimension {dim} is not a power of two"
            )));
        }
        let herm = matrix.hermiticity_defect();
        if herm > DENSITY_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix is not Hermitian (defect {herm:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix trace {tr} is not 1"
            )));
        }
        let (vals, _) = matrix.hermitian_eigen();
        if let Some(&min) = vals.first() {
            if min < EIGENVALUE_FLOOR {
                return Err(Error::InvalidState(format!(
                    "density matrix has negative eigenvalue {min:.3e}"
                )));
            }
        }
        Ok(DensityMatrix { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Maximally mixed state `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if !dim.is_power_of_two() || dim == 0 {
            return Err(Error::InvalidArgument(
                "dimension must be a power of two".into(),
            ));
        }
        let scale = Complex64::new(1.0 / dim as f64, 0.0);
        DensityMatrix::new(CMatrix::identity(dim).scale(scale))
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.matrix.mul(&self.matrix).trace().re
    }

    /// Eigenvalues in ascending order, with floating-point negatives
    /// above [`EIGENVALUE_FLOOR`] clamped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let (vals, _) = self.matrix.hermitian_eigen();
        vals.into_iter().map(|v| v.max(0.0)).collect()
    }

    /// `C rho C^dag` for a (not necessarily unitary-checked) operator `C`.
    pub fn conjugate_by(&self, c: &CMatrix) -> Result<DensityMatrix> {
        if c.dim() != self.dim() {
            return Err(Error::InvalidArgument(
                "conjugation dimension mismatch".into(),
            ));
        }
        DensityMatrix::new(c.mul(&self.matrix).mul(&c.adjoint()))
    }

    /// `<psi|rho|psi>` for amplitudes `psi` of matching dimension.
    pub fn expectation(&self, psi: &[Complex64]) -> Result<f64> {
        if psi.len() != self.dim() {
            return Err(Error::InvalidArgument(
                "expectation dimension mismatch".into(),
            ));
        }
        let mut acc = Complex64::ZERO;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                acc += psi[r].conj() * self.matrix[(r, c)] * psi[c];
            }
        }
        Ok(acc.re)
    }

    /// Bloch vector `(Tr(rho X), Tr(rho Y), Tr(rho Z))` of a single-qubit
    /// state.
    pub fn bloch_vector(&self) -> Result<BlochVector> {
        if self.dim() != 2 {
            return Err(Error::InvalidArgument(
                "Bloch vector requires a single qubit".into(),
            ));
        }
        let comp = |p: Pauli| self.matrix.mul(&p.matrix()).trace().re;
        BlochVector::new(comp(Pauli::X), comp(Pauli::Y), comp(Pauli::Z))
    }
}

/// Real 3-vector `s` with `rho = (I + s . sigma)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl BlochVector {
    pub fn new(s1: f64, s2: f64, s3: f64) -> Result<Self> {
        for (label, v) in [("s1", s1), ("s2", s2), ("s3", s3)] {
            crate::error::ensure_finite(label, v)?;
            if v.abs() > 1.0 + 1e-9 {
                return Err(Error::InvalidState(format!(
                    "Bloch component {label} = {v} outside [-1, 1]"
                )));
            }
        }
        let norm_sq = s1 * s1 + s2 * s2 + s3 * s3;
        if norm_sq > 1.0 + 1e-9 {
            return Err(Error::InvalidState(format!(
                "Bloch vector norm^2 = {norm_sq} exceeds 1"
            )));
        }
        Ok(BlochVector { s1, s2, s3 })
    }

    pub fn norm_sq(&self) -> f64 {
        self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3
    }

    /// Reconstruct `(I + s . sigma)/2`.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        let half = Complex64::new(0.5, 0.0);
        let m = CMatrix::identity(2)
            .add(&Pauli::X.matrix().scale(Complex64::new(self.s1, 0.0)))
            .add(&Pauli::Y.matrix().scale(Complex64::new(self.s2, 0.0)))
            .add(&Pauli::Z.matrix().scale(Complex64::new(self.s3, 0.0)))
            .scale(half);
        DensityMatrix::new(m)
    }

    pub fn max_component_diff(&self, other: &BlochVector) -> f64 {
        (self.s1 - other.s1)
            .abs()
            .max((self.s2 - other.s2).abs())
            .max((self.s3 - other.s3).abs())
    }
}

/// Uhlmann fidelity `F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho))`.
///
/// Returns `F`, not `F^2`. When `rho` is pure this reduces to
/// `sqrt(<psi|sigma|psi>)`, which is used directly whenever
/// `purity(rho) > PURITY_PURE`; the general case goes through a Hermitian
/// eigendecomposition.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::InvalidArgument(format!(
            "fidelity dimension mismatch: {} vs {}",
            rho.dim(),
            sigma.dim()
        )));
    }

    // The closed form applies whenever either argument is pure (fidelity
    // is symmetric); it also avoids taking square roots of noise
    // eigenvalues in the rank-deficient kernel.
    if rho.purity() > PURITY_PURE {
        return pure_overlap_fidelity(rho, sigma);
    }
    if sigma.purity() > PURITY_PURE {
        return pure_overlap_fidelity(sigma, rho);
    }

    let (vals, vecs) = rho.matrix().hermitian_eigen();
    let mut sqrt_rho = CMatrix::zeros(rho.dim());
    for (i, v) in vals.iter().enumerate() {
        if *v < EIGENVALUE_FLOOR {
            return Err(Error::InvalidState(format!(
                "fidelity input has negative eigenvalue {v:.3e}"
            )));
        }
        let s = v.max(0.0).sqrt();
        for r in 0..rho.dim() {
            for c in 0..rho.dim() {
                sqrt_rho[(r, c)] += Complex64::new(s, 0.0) * vecs[(r, i)] * vecs[(c, i)].conj();
            }
        }
    }
    let inner = sqrt_rho.mul(sigma.matrix()).mul(&sqrt_rho);
    let (inner_vals, _) = inner.hermitian_eigen();
    let mut f = 0.0;
    for v in inner_vals {
        if v < EIGENVALUE_FLOOR {
            return Err(Error::InvalidState(format!(
                "fidelity kernel has negative eigenvalue {v:.3e}"
            )));
        }
        f += v.max(0.0).sqrt();
    }
    Ok(f.min(1.0))
}

/// `sqrt(<psi|other|psi>)` for a pure `projector = |psi><psi|`, with
/// `psi` read off the projector's dominant column.
fn pure_overlap_fidelity(projector: &DensityMatrix, other: &DensityMatrix) -> Result<f64> {
    let dim = projector.dim();
    let m = projector.matrix();
    let j = (0..dim)
        .max_by(|&a, &b| m[(a, a)].re.partial_cmp(&m[(b, b)].re).unwrap())
        .unwrap();
    let scale = m[(j, j)].re.sqrt();
    let psi: Vec<Complex64> = (0..dim).map(|i| m[(i, j)] / scale).collect();
    let overlap = other.expectation(&psi)?;
    Ok(overlap.max(0.0).sqrt().min(1.0))
}
