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

//! Pauli words and their expansion coefficients.
//!
//! An n-qubit operator `M` decomposes uniquely over the 4^n Pauli words
//! with Hilbert-Schmidt coefficients `c_Q = Tr(Q M) / 2^n`. Conjugating a
//! Pauli word by a unitary yields another unit-weight combination,
//! `sum |c_Q|^2 = 1`, which is the quantity the scrambling diagnostics
//! are built on.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gate::UnitaryGate;
use crate::linalg::CMatrix;

/// Coefficients with magnitude at or below this threshold are reported
/// as exact zeros by [`conjugate_pauli`].
pub const COEFF_CUTOFF: f64 = 1e-12;

/// Single-qubit Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> CMatrix {
        let (a, b, c, d) = match self {
            Pauli::I => ((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)),
            Pauli::X => ((0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)),
            Pauli::Y => ((0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)),
            Pauli::Z => ((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)),
        };
        CMatrix::from_vec(
            2,
            vec![
                Complex64::new(a.0, a.1),
                Complex64::new(b.0, b.1),
                Complex64::new(c.0, c.1),
                Complex64::new(d.0, d.1),
            ],
        )
        .unwrap()
    }

    /// For row bit `b`, the column bit and entry of the single nonzero
    /// element `P[b][col]` in that row.
    fn row_action(self, bit: usize) -> (usize, Complex64) {
        match self {
            Pauli::I => (bit, Complex64::ONE),
            Pauli::X => (1 - bit, Complex64::ONE),
            Pauli::Y => (
                1 - bit,
                if bit == 0 {
                    -Complex64::I
                } else {
                    Complex64::I
                },
            ),
            Pauli::Z => (
                bit,
                if bit == 0 {
                    Complex64::ONE
                } else {
                    -Complex64::ONE
                },
            ),
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;

    fn try_from(c: char) -> Result<Pauli> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::InvalidArgument(format!(
                "unknown Pauli letter '{other}'"
            ))),
        }
    }
}

/// A word of single-qubit Paulis, site 0 first (highest-order index bits).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString(Vec<Pauli>);

impl PauliString {
    pub fn new(ops: Vec<Pauli>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::InvalidArgument(
                "Pauli string must have at least one site".into(),
            ));
        }
        Ok(PauliString(ops))
    }

    /// The weight-1 word with `p` at `site` and identities elsewhere.
    pub fn single(k_qubits: usize, site: usize, p: Pauli) -> Result<Self> {
        if site >= k_qubits {
            return Err(Error::InvalidArgument(format!(
                "site {site} out of range for {k_qubits} qubits"
            )));
        }
        let mut ops = vec![Pauli::I; k_qubits];
        ops[site] = p;
        PauliString::new(ops)
    }

    pub fn k_qubits(&self) -> usize {
        self.0.len()
    }

    pub fn ops(&self) -> &[Pauli] {
        &self.0
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&p| p != Pauli::I).count()
    }

    /// Dense 2^k x 2^k matrix of the word.
    pub fn matrix(&self) -> CMatrix {
        let mut m = CMatrix::identity(1);
        for p in &self.0 {
            m = m.kron(&p.matrix());
        }
        m
    }

    /// All 4^k words over `k` sites, in lexicographic (I, X, Y, Z) order.
    pub fn all(k_qubits: usize) -> impl Iterator<Item = PauliString> {
        (0..4usize.pow(k_qubits as u32)).map(move |mut code| {
            let mut ops = vec![Pauli::I; k_qubits];
            for site in (0..k_qubits).rev() {
                ops[site] = Pauli::ALL[code % 4];
                code /= 4;
            }
            PauliString(ops)
        })
    }

    /// `Tr(self * m)` using the one-nonzero-entry-per-row structure of
    /// Pauli words; O(2^k) instead of a dense product.
    fn trace_against(&self, m: &CMatrix) -> Complex64 {
        let k = self.k_qubits();
        let dim = 1 << k;
        debug_assert_eq!(m.dim(), dim);
        let mut acc = Complex64::ZERO;
        for row in 0..dim {
            let mut col = 0usize;
            let mut entry = Complex64::ONE;
            for (site, p) in self.0.iter().enumerate() {
                let shift = k - 1 - site;
                let (cbit, e) = p.row_action((row >> shift) & 1);
                col |= cbit << shift;
                entry *= e;
            }
            acc += entry * m[(col, row)];
        }
        acc
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ops = s.chars().map(Pauli::try_from).collect::<Result<Vec<_>>>()?;
        PauliString::new(ops)
    }
}

/// Expansion of an operator over Pauli words: `M = sum c_Q Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliExpansion {
    k_qubits: usize,
    terms: BTreeMap<PauliString, Complex64>,
}

impl PauliExpansion {
    pub fn new(k_qubits: usize, terms: BTreeMap<PauliString, Complex64>) -> Result<Self> {
        if terms.keys().any(|q| q.k_qubits() != k_qubits) {
            return Err(Error::InvalidArgument(
                "expansion term has mismatched site count".into(),
            ));
        }
        Ok(PauliExpansion { k_qubits, terms })
    }

    pub fn k_qubits(&self) -> usize {
        self.k_qubits
    }

    pub fn terms(&self) -> &BTreeMap<PauliString, Complex64> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q`, zero when absent.
    pub fn coefficient(&self, q: &PauliString) -> Complex64 {
        self.terms.get(q).copied().unwrap_or(Complex64::ZERO)
    }

    /// `sum |c_Q|^2` over all terms.
    pub fn weight_sum(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// `sum |c_Q|^2` restricted to weight-1 words.
    pub fn single_site_weight(&self) -> f64 {
        self.terms
            .iter()
            .filter(|(q, _)| q.weight() == 1)
            .map(|(_, c)| c.norm_sqr())
            .sum()
    }

    /// Dense matrix `sum c_Q Q`.
    pub fn reconstruct(&self) -> CMatrix {
        let dim = 1 << self.k_qubits;
        let mut m = CMatrix::zeros(dim);
        for (q, c) in &self.terms {
            m = m.add(&q.matrix().scale(*c));
        }
        m
    }

    /// Largest coefficient difference against `other`, over the union of
    /// both term sets.
    pub fn max_coefficient_diff(&self, other: &PauliExpansion) -> f64 {
        let mut dev: f64 = 0.0;
        for (q, c) in &self.terms {
            dev = dev.max((c - other.coefficient(q)).norm());
        }
        for (q, c) in &other.terms {
            dev = dev.max((c - self.coefficient(q)).norm());
        }
        dev
    }
}

/// Expand `U^dag P U` in the Pauli basis.
///
/// Coefficients are extracted with the Hilbert-Schmidt inner product
/// `c_Q = Tr(Q U^dag P U)/2^k`; magnitudes at or below [`COEFF_CUTOFF`]
/// are dropped.
pub fn conjugate_pauli(u: &UnitaryGate, p: &PauliString) -> Result<PauliExpansion> {
    let k = u.k_qubits();
    if p.k_qubits() != k {
        return Err(Error::InvalidArgument(format!(
            "Pauli string has {} sites but gate acts on {k} qubits",
            p.k_qubits()
        )));
    }
    let dim = 1usize << k;
    let m = u.matrix().adjoint().mul(&p.matrix()).mul(u.matrix());
    let norm = 1.0 / dim as f64;
    let mut terms = BTreeMap::new();
    for q in PauliString::all(k) {
        let c = q.trace_against(&m) * norm;
        if c.norm() > COEFF_CUTOFF {
            terms.insert(q, c);
        }
    }
    PauliExpansion::new(k, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate;

    #[test]
    fn string_roundtrip_and_weight() {
        let s: PauliString = "XIZ".parse().unwrap();
        assert_eq!(s.to_string(), "XIZ");
        assert_eq!(s.weight(), 2);
        assert_eq!(s.k_qubits(), 3);
        assert!("XQZ".parse::<PauliString>().is_err());
        assert!(PauliString::new(vec![]).is_err());
    }

    #[test]
    fn all_strings_count() {
        assert_eq!(PauliString::all(2).count(), 16);
        assert_eq!(PauliString::all(3).count(), 64);
    }

    #[test]
    fn trace_against_matches_dense_product() {
        for q in PauliString::all(2) {
            for p in PauliString::all(2) {
                let dense = q.matrix().mul(&p.matrix()).trace();
                let sparse = q.trace_against(&p.matrix());
                assert!((dense - sparse).norm() < 1e-14, "{q} vs {p}");
            }
        }
    }

    #[test]
    fn identity_conjugation_is_identity() {
        let u = gate::identity_gate(3);
        for p in ["XII", "IYI", "ZZZ", "XYZ"] {
            let p: PauliString = p.parse().unwrap();
            let e = conjugate_pauli(&u, &p).unwrap();
            assert_eq!(e.num_terms(), 1);
            assert!((e.coefficient(&p) - Complex64::ONE).norm() < 1e-14);
        }
    }

    #[test]
    fn conjugation_rejects_mismatched_sites() {
        let u = gate::identity_gate(3);
        let p: PauliString = "XX".parse().unwrap();
        assert!(conjugate_pauli(&u, &p).is_err());
    }

    #[test]
    fn hadamard_swaps_x_and_z() {
        let h = gate::hadamard();
        let x: PauliString = "X".parse().unwrap();
        let z: PauliString = "Z".parse().unwrap();
        let e = conjugate_pauli(&h, &x).unwrap();
        assert_eq!(e.num_terms(), 1);
        assert!((e.coefficient(&z) - Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn expansion_reconstructs_operator() {
        let h = gate::hadamard();
        let y: PauliString = "Y".parse().unwrap();
        let e = conjugate_pauli(&h, &y).unwrap();
        let expected = h.matrix().adjoint().mul(&y.matrix()).mul(h.matrix());
        assert!(e.reconstruct().max_abs_diff(&expected) < 1e-12);
        assert!((e.weight_sum() - 1.0).abs() < 1e-12);
    }
}
