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

//! Dense pure states over n qubits.
//!
//! Index convention: qubit 0 is the MOST significant bit of the amplitude
//! index, so index `i` spells the basis label `|q0 q1 ... q_{n-1}>` when
//! written in binary. Basis labels therefore read left to right in qubit
//! order, and the bit of qubit `q` sits at shift `n - 1 - q`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::gate::UnitaryGate;
use crate::linalg::CMatrix;

/// Norm defect tolerated when accepting amplitudes from a caller.
pub const NORM_TOL: f64 = 1e-10;

/// Probability below which a projective branch is treated as impossible
/// and flagged instead of renormalized.
pub const PROB_CUTOFF: f64 = 1e-14;

/// Normalized pure state of `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

/// Outcome of a projective measurement branch.
///
/// `state` is `None` when the branch probability is below [`PROB_CUTOFF`];
/// there is no post-measurement state to renormalize in that case.
#[derive(Debug, Clone)]
pub struct Projection {
    pub probability: f64,
    pub state: Option<StateVector>,
}

impl StateVector {
    /// Wrap explicit amplitudes; the vector must already be normalized
    /// within [`NORM_TOL`].
    pub fn new(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::InvalidArgument(
                "state needs at least one qubit".into(),
            ));
        }
        if amps.len() != 1 << n_qubits {
            return Err(Error::InvalidArgument(format!(
                "amplitude count {} does not match {n_qubits} qubits",
                amps.len()
            )));
        }
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument("amplitudes must be finite".into()));
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "state norm^2 = {norm_sq} is not 1 within {NORM_TOL:.0e}"
            )));
        }
        Ok(StateVector { n_qubits, amps })
    }

    /// Computational basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if index >= 1 << n_qubits {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::ZERO; 1 << n_qubits];
        amps[index] = Complex64::ONE;
        Ok(StateVector { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::InvalidArgument(
                "inner product needs equal qubit counts".into(),
            ));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Tensor product, `self` on the high-order qubits.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        StateVector {
            n_qubits: self.n_qubits + other.n_qubits,
            amps,
        }
    }

    /// Largest amplitude difference against `other`.
    pub fn max_amp_diff(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Pure density matrix `|psi><psi|`.
    pub fn density(&self) -> DensityMatrix {
        let dim = self.dim();
        let mut m = CMatrix::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = self.amps[r] * self.amps[c].conj();
            }
        }
        DensityMatrix::new(m).expect("pure projector is a valid density matrix")
    }

    fn shift_of(&self, qubit: usize) -> usize {
        self.n_qubits - 1 - qubit
    }

    fn check_wires(&self, wires: &[usize]) -> Result<()> {
        for (i, &w) in wires.iter().enumerate() {
            if w >= self.n_qubits {
                return Err(Error::InvalidArgument(format!(
                    "wire {w} out of range for {} qubits",
                    self.n_qubits
                )));
            }
            if wires[..i].contains(&w) {
                return Err(Error::InvalidArgument(format!("wire {w} listed twice")));
            }
        }
        Ok(())
    }

    /// Apply `gate` on the listed wires. The first wire takes the gate's
    /// most significant qubit slot, matching the global index convention.
    pub fn apply_gate(&self, gate: &UnitaryGate, wires: &[usize]) -> Result<StateVector> {
        if wires.len() != gate.k_qubits() {
            return Err(Error::InvalidArgument(format!(
                "gate acts on {} qubits but {} wires given",
                gate.k_qubits(),
                wires.len()
            )));
        }
        self.check_wires(wires)?;

        let k = wires.len();
        let shifts: Vec<usize> = wires.iter().map(|&w| self.shift_of(w)).collect();
        let wire_mask: usize = shifts.iter().map(|&s| 1usize << s).sum();
        let m = gate.matrix();

        let mut out = vec![Complex64::ZERO; self.dim()];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut row = 0usize;
            for &s in &shifts {
                row = (row << 1) | ((i >> s) & 1);
            }
            let base = i & !wire_mask;
            let mut acc = Complex64::ZERO;
            for col in 0..(1 << k) {
                let entry = m[(row, col)];
                if entry == Complex64::ZERO {
                    continue;
                }
                let mut idx = base;
                for (j, &s) in shifts.iter().enumerate() {
                    if (col >> (k - 1 - j)) & 1 == 1 {
                        idx |= 1 << s;
                    }
                }
                acc += entry * self.amps[idx];
            }
            *slot = acc;
        }
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amps: out,
        })
    }

    /// Reduced density matrix on the `keep` qubits, ordered as listed
    /// (first kept qubit becomes the most significant index bit).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidArgument("keep list must be non-empty".into()));
        }
        self.check_wires(keep)?;

        let rest: Vec<usize> = (0..self.n_qubits).filter(|q| !keep.contains(q)).collect();
        let kd = 1usize << keep.len();
        let rd = 1usize << rest.len();
        let keep_shifts: Vec<usize> = keep.iter().map(|&q| self.shift_of(q)).collect();
        let rest_shifts: Vec<usize> = rest.iter().map(|&q| self.shift_of(q)).collect();

        let compose = |bits: usize, shifts: &[usize]| -> usize {
            let mut idx = 0usize;
            for (j, &s) in shifts.iter().enumerate() {
                if (bits >> (shifts.len() - 1 - j)) & 1 == 1 {
                    idx |= 1 << s;
                }
            }
            idx
        };

        let mut rho = CMatrix::zeros(kd);
        for e in 0..rd {
            let env = compose(e, &rest_shifts);
            for r in 0..kd {
                let ar = self.amps[env | compose(r, &keep_shifts)];
                if ar == Complex64::ZERO {
                    continue;
                }
                for c in 0..kd {
                    let ac = self.amps[env | compose(c, &keep_shifts)];
                    rho[(r, c)] += ar * ac.conj();
                }
            }
        }
        DensityMatrix::new(rho)
    }

    /// Project the qubit pair onto Bell state `|beta_outcome>`.
    ///
    /// Outcome indices follow the measurement bit pair: 0 <-> (0,0), 1 <->
    /// (0,1), 2 <-> (1,0), 3 <-> (1,1). The returned state keeps all
    /// qubits, with the pair collapsed onto the Bell state.
    pub fn project_pair(&self, pair: (usize, usize), outcome: usize) -> Result<Projection> {
        let (qa, qb) = pair;
        if qa == qb {
            return Err(Error::InvalidArgument("pair qubits must differ".into()));
        }
        self.check_wires(&[qa, qb])?;
        let bell = bell_state(outcome)?;

        let sa = self.shift_of(qa);
        let sb = self.shift_of(qb);
        let pair_mask = (1usize << sa) | (1usize << sb);

        let mut out = vec![Complex64::ZERO; self.dim()];
        let mut prob = 0.0f64;
        for env in 0..self.dim() {
            if env & pair_mask != 0 {
                continue;
            }
            let mut overlap = Complex64::ZERO;
            for ba in 0..2usize {
                for bb in 0..2usize {
                    let idx = env | (ba << sa) | (bb << sb);
                    overlap += bell.amplitude((ba << 1) | bb).conj() * self.amps[idx];
                }
            }
            prob += overlap.norm_sqr();
            for ba in 0..2usize {
                for bb in 0..2usize {
                    let idx = env | (ba << sa) | (bb << sb);
                    out[idx] = bell.amplitude((ba << 1) | bb) * overlap;
                }
            }
        }

        if prob < PROB_CUTOFF {
            return Ok(Projection {
                probability: prob,
                state: None,
            });
        }
        let scale = 1.0 / prob.sqrt();
        for z in &mut out {
            *z *= scale;
        }
        Ok(Projection {
            probability: prob,
            state: Some(StateVector {
                n_qubits: self.n_qubits,
                amps: out,
            }),
        })
    }

    /// Project the listed wires onto the computational bit pattern `bits`
    /// (first wire = most significant bit of `bits`).
    pub fn project_computational(&self, wires: &[usize], bits: usize) -> Result<Projection> {
        self.check_wires(wires)?;
        if bits >= 1 << wires.len() {
            return Err(Error::InvalidArgument(format!(
                "bit pattern {bits} out of range for {} wires",
                wires.len()
            )));
        }
        let shifts: Vec<usize> = wires.iter().map(|&w| self.shift_of(w)).collect();
        let mut out = vec![Complex64::ZERO; self.dim()];
        let mut prob = 0.0f64;
        for (i, amp) in self.amps.iter().enumerate() {
            let mut pattern = 0usize;
            for &s in &shifts {
                pattern = (pattern << 1) | ((i >> s) & 1);
            }
            if pattern == bits {
                prob += amp.norm_sqr();
                out[i] = *amp;
            }
        }
        if prob < PROB_CUTOFF {
            return Ok(Projection {
                probability: prob,
                state: None,
            });
        }
        let scale = 1.0 / prob.sqrt();
        for z in &mut out {
            *z *= scale;
        }
        Ok(Projection {
            probability: prob,
            state: Some(StateVector {
                n_qubits: self.n_qubits,
                amps: out,
            }),
        })
    }
}

/// The four Bell states on two qubits:
///
/// ```text
/// beta_0 = (|00> + |11>)/sqrt(2)    beta_1 = (|01> + |10>)/sqrt(2)
/// beta_2 = (|00> - |11>)/sqrt(2)    beta_3 = (|01> - |10>)/sqrt(2)
/// ```
pub fn bell_state(index: usize) -> Result<StateVector> {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let z = Complex64::ZERO;
    let amps = match index {
        0 => vec![h, z, z, h],
        1 => vec![z, h, h, z],
        2 => vec![h, z, z, -h],
        3 => vec![z, h, -h, z],
        other => {
            return Err(Error::InvalidArgument(format!(
                "Bell index {other} not in 0..=3"
            )))
        }
    };
    Ok(StateVector { n_qubits: 2, amps })
}
