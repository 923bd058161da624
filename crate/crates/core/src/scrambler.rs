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

//! The 3-qubit scrambling unitaries and scrambling diagnostics.
//!
//! The maximal scrambler is a fixed real 8x8 matrix with entries in
//! {0, +-1/2} that conjugates every single-site Pauli into a weight-3
//! Pauli word. Its one-parameter deformation interpolates from the
//! identity at `theta = 0` to the maximal scrambler at `theta = pi/2`;
//! in between, conjugation spreads a single-site Pauli over several
//! words, which [`scrambling_report`] quantifies per input.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::gate::UnitaryGate;
use crate::linalg::CMatrix;
use crate::pauli::{conjugate_pauli, Pauli, PauliExpansion, PauliString};

/// Deformation angle restricted to `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScramblerParams {
    theta: f64,
}

impl ScramblerParams {
    /// Accepts `[0, pi/2]`; ulp-level overshoot from grid arithmetic is
    /// snapped to the nearest endpoint rather than rejected.
    pub fn new(theta: f64) -> Result<Self> {
        crate::error::ensure_finite("theta", theta)?;
        let snapped = if (-1e-12..0.0).contains(&theta) {
            0.0
        } else if theta > FRAC_PI_2 && theta <= FRAC_PI_2 + 1e-12 {
            FRAC_PI_2
        } else {
            theta
        };
        if !(0.0..=FRAC_PI_2).contains(&snapped) {
            return Err(Error::InvalidArgument(format!(
                "theta = {theta} outside [0, pi/2]"
            )));
        }
        Ok(ScramblerParams { theta: snapped })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// The maximally scrambling 3-qubit unitary (all entries 0 or +-1/2).
pub fn max_scrambler() -> UnitaryGate {
    #[rustfmt::skip]
    let rows: [f64; 64] = [
        -1.0,  0.0,  0.0, -1.0,  0.0, -1.0, -1.0,  0.0,
         0.0,  1.0, -1.0,  0.0, -1.0,  0.0,  0.0,  1.0,
         0.0, -1.0,  1.0,  0.0, -1.0,  0.0,  0.0,  1.0,
         1.0,  0.0,  0.0,  1.0,  0.0, -1.0, -1.0,  0.0,
         0.0, -1.0, -1.0,  0.0,  1.0,  0.0,  0.0,  1.0,
         1.0,  0.0,  0.0, -1.0,  0.0,  1.0, -1.0,  0.0,
         1.0,  0.0,  0.0, -1.0,  0.0, -1.0,  1.0,  0.0,
         0.0, -1.0, -1.0,  0.0, -1.0,  0.0,  0.0, -1.0,
    ];
    let data = rows.iter().map(|&x| Complex64::new(x / 2.0, 0.0)).collect();
    UnitaryGate::new_unchecked(CMatrix::from_vec(8, data).unwrap())
}

/// The partial scrambler: identity at `theta = 0`, the maximal scrambler
/// at `theta = pi/2`, and exactly unitary for every angle in between.
pub fn partial_scrambler(params: ScramblerParams) -> UnitaryGate {
    let theta = params.theta();
    let ep = Complex64::new(0.0, 2.0 * theta).exp();
    let em = ep.conj();
    let one = Complex64::ONE;
    let three = Complex64::new(3.0, 0.0);
    let m1p = one - ep;
    let m1m = one - em;
    let m2p = one + three * ep;
    let m2m = one + three * em;
    let m3p = three + ep;
    let m3m = three + em;
    let z = Complex64::ZERO;

    #[rustfmt::skip]
    let entries = vec![
         m2p,    z,    z, -m1p,    z, -m1p, -m1p,    z,
           z,  m3p, -m1p,    z, -m1p,    z,    z,  m1p,
           z, -m1p,  m3p,    z, -m1p,    z,    z,  m1p,
         m1m,    z,    z,  m3m,    z, -m1m, -m1m,    z,
           z, -m1p, -m1p,    z,  m3p,    z,    z,  m1p,
         m1m,    z,    z, -m1m,    z,  m3m, -m1m,    z,
         m1m,    z,    z, -m1m,    z, -m1m,  m3m,    z,
           z, -m1m, -m1m,    z, -m1m,    z,    z,  m2m,
    ];
    let quarter = Complex64::new(0.25, 0.0);
    let data = entries.into_iter().map(|e| e * quarter).collect();
    UnitaryGate::new_unchecked(CMatrix::from_vec(8, data).unwrap())
}

/// One row of a [`ScramblingReport`]: the expansion of `U^dag P U` for a
/// single-site input `P`, plus how much weight left the single-site words.
#[derive(Debug, Clone)]
pub struct ScramblingRow {
    pub pauli: PauliString,
    pub expansion: PauliExpansion,
    /// `1 - sum |c_Q|^2` over weight-1 words: 0 when nothing spread,
    /// 1 when no single-site weight remains.
    pub delocalization: f64,
}

/// Conjugation expansions of all nine single-site Paulis at one angle.
#[derive(Debug, Clone)]
pub struct ScramblingReport {
    pub theta: f64,
    pub rows: Vec<ScramblingRow>,
}

/// The nine single-site inputs in operator-major order:
/// X/Y/Z each on sites 0, 1, 2.
pub fn single_site_inputs() -> Vec<PauliString> {
    let mut out = Vec::with_capacity(9);
    for p in [Pauli::X, Pauli::Y, Pauli::Z] {
        for site in 0..3 {
            out.push(PauliString::single(3, site, p).unwrap());
        }
    }
    out
}

/// Expand `U(theta)^dag P U(theta)` for every single-site `P`.
pub fn scrambling_report(theta: f64) -> Result<ScramblingReport> {
    let gate = partial_scrambler(ScramblerParams::new(theta)?);
    let rows = single_site_inputs()
        .into_iter()
        .map(|pauli| {
            let expansion = conjugate_pauli(&gate, &pauli)?;
            let delocalization = 1.0 - expansion.single_site_weight();
            Ok(ScramblingRow {
                pauli,
                expansion,
                delocalization,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScramblingReport { theta, rows })
}

impl Serialize for ScramblingRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term {
            string: String,
            re: f64,
            im: f64,
        }
        let terms: Vec<Term> = self
            .expansion
            .terms()
            .iter()
            .map(|(q, c)| Term {
                string: q.to_string(),
                re: c.re,
                im: c.im,
            })
            .collect();
        let mut st = serializer.serialize_struct("ScramblingRow", 3)?;
        st.serialize_field("pauli", &self.pauli.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("delocalization", &self.delocalization)?;
        st.end()
    }
}

impl Serialize for ScramblingReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ScramblingReport", 2)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}
