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

//! Independent cross-check evaluators.
//!
//! Nothing in the simulation or analytic layers calls into this module.
//! It holds hand-derived closed forms — the single-word conjugation
//! table of the maximal scrambler, the trigonometric conjugation
//! expansions of the partial scrambler, and the Bell-basis expansion of
//! the full protocol state — evaluated from scratch so the verification
//! command and the test suite can compare the computed objects against
//! them. Keep it that way: a check that shares code with the thing it
//! checks verifies nothing.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::Result;
use crate::pauli::{PauliExpansion, PauliString};
use crate::scrambler::ScramblerParams;
use crate::state::{bell_state, StateVector};
use crate::teleport::{SecretState, PROTOCOL_QUBITS};

/// The nine single-site conjugations of the maximal scrambler: input
/// word, output word, coefficient (always -1).
pub fn max_scrambler_conjugations() -> Vec<(PauliString, PauliString, f64)> {
    [
        ("XII", "XZZ"),
        ("IXI", "ZXZ"),
        ("IIX", "ZZX"),
        ("YII", "YXX"),
        ("IYI", "XYX"),
        ("IIY", "XXY"),
        ("ZII", "ZYY"),
        ("IZI", "YZY"),
        ("IIZ", "YYZ"),
    ]
    .iter()
    .map(|(p, q)| (p.parse().unwrap(), q.parse().unwrap(), -1.0))
    .collect()
}

/// Closed-form expansion of `U(theta)^dag P U(theta)` for a single-site
/// input `P`, as trigonometric coefficients on explicit words.
///
/// Terms whose coefficient vanishes at the given angle are dropped, so
/// the result compares directly against the numerically computed
/// expansion.
pub fn partial_scrambler_conjugation(theta: f64, input: &PauliString) -> Result<PauliExpansion> {
    let theta = ScramblerParams::new(theta)?.theta();
    let (s, c) = theta.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let (s3, c3) = (s2 * s, c2 * c);
    let s4 = s2 * s2;
    let c4 = c2 * c2;

    // (word, real coefficient, imaginary coefficient) per input.
    let terms: Vec<(&str, f64)> = match input.to_string().as_str() {
        "XII" => vec![
            ("IIY", -s3 * c),
            ("IYI", -s3 * c),
            ("YYY", -s3 * c),
            ("XXX", -s2 * c2),
            ("ZXZ", s2 * c2),
            ("ZZX", s2 * c2),
            ("YII", s * c3),
            ("XZZ", -s4),
            ("YXX", s * c),
            ("XII", c2),
        ],
        "IXI" => vec![
            ("IIY", -s3 * c),
            ("YII", -s3 * c),
            ("YYY", -s3 * c),
            ("XXX", -s2 * c2),
            ("XZZ", s2 * c2),
            ("ZZX", s2 * c2),
            ("IYI", s * c3),
            ("ZXZ", -s4),
            ("XYX", s * c),
            ("IXI", c2),
        ],
        "IIX" => vec![
            ("IYI", -s3 * c),
            ("YII", -s3 * c),
            ("YYY", -s3 * c),
            ("XXX", -s2 * c2),
            ("XZZ", s2 * c2),
            ("ZXZ", s2 * c2),
            ("IIY", s * c3),
            ("ZZX", -s4),
            ("XXY", s * c),
            ("IIX", c2),
        ],
        "YII" => vec![
            ("IIY", -s2 * c2),
            ("IYI", -s2 * c2),
            ("YYY", -s2 * c2),
            ("XXX", -s * c3),
            ("ZXZ", s * c3),
            ("ZZX", s * c3),
            ("XZZ", -s3 * c),
            ("YII", c4),
            ("XII", -s * c),
            ("YXX", -s2),
        ],
        "IYI" => vec![
            ("IIY", -s2 * c2),
            ("YII", -s2 * c2),
            ("YYY", -s2 * c2),
            ("XXX", -s * c3),
            ("XZZ", s * c3),
            ("ZZX", s * c3),
            ("ZXZ", -s3 * c),
            ("IYI", c4),
            ("IXI", -s * c),
            ("XYX", -s2),
        ],
        "IIY" => vec![
            ("IYI", -s2 * c2),
            ("YII", -s2 * c2),
            ("YYY", -s2 * c2),
            ("XXX", -s * c3),
            ("XZZ", s * c3),
            ("ZXZ", s * c3),
            ("ZZX", -s3 * c),
            ("IIY", c4),
            ("IIX", -s * c),
            ("XXY", -s2),
        ],
        "ZII" => vec![("ZII", c2), ("ZYY", -s2), ("YXZ", -s * c), ("YZX", -s * c)],
        "IZI" => vec![("IZI", c2), ("YZY", -s2), ("XYZ", -s * c), ("ZYX", -s * c)],
        "IIZ" => vec![("IIZ", c2), ("YYZ", -s2), ("XZY", -s * c), ("ZXY", -s * c)],
        other => {
            return Err(crate::error::Error::InvalidArgument(format!(
                "no closed-form conjugation for input '{other}'"
            )))
        }
    };

    let mut map = BTreeMap::new();
    for (word, coeff) in terms {
        if coeff.abs() <= crate::pauli::COEFF_CUTOFF {
            continue;
        }
        let key: PauliString = word.parse()?;
        let entry = map.entry(key).or_insert(Complex64::ZERO);
        *entry += Complex64::new(coeff, 0.0);
    }
    map.retain(|_, v: &mut Complex64| v.norm() > crate::pauli::COEFF_CUTOFF);
    PauliExpansion::new(3, map)
}

/// Index of the 7-qubit basis state with the given per-qubit bits.
fn basis_index(bits: [usize; PROTOCOL_QUBITS]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b)
}

/// The protocol state built from its Bell-basis expansion.
///
/// The state decomposes over products of Bell states on the qubit pairs
/// (0,5), (1,4) and (2,3) tensored with one of four receiver-qubit
/// vectors; the coefficients are polynomials in sin/cos of the angle.
/// This builder writes the 128 amplitudes straight from that closed
/// form, never touching gate application, so it is an independent
/// oracle for the circuit route.
pub fn protocol_state_expansion(secret: &SecretState, theta: f64) -> Result<StateVector> {
    let theta = ScramblerParams::new(theta)?.theta();
    let alpha = Complex64::new(secret.alpha(), 0.0);
    let beta = secret.beta();
    let (s, c) = theta.sin_cos();
    let s2t = (2.0 * theta).sin();
    let s4t = (4.0 * theta).sin();
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);

    // Receiver-qubit vectors attached to each group of terms.
    let v_same = [alpha, beta];
    let v_phase = [alpha, -beta];
    let v_flip = [beta, alpha];
    let v_flip_phase = [-beta, alpha];

    // ((bell on (0,5), bell on (1,4), bell on (2,3)), coefficient, receiver vector)
    type Term = ((usize, usize, usize), Complex64, [Complex64; 2]);
    let mut terms: Vec<Term> = vec![((0, 0, 0), re(4.0), v_same)];

    let g_phase: [((usize, usize, usize), Complex64); 13] = [
        ((1, 1, 2), re(s2t * s2t)),
        ((1, 2, 1), re(s2t * s2t)),
        ((2, 3, 3), re(s2t * s2t)),
        ((3, 2, 3), re(s2t * s2t)),
        ((3, 3, 2), re(s2t * s2t)),
        ((2, 0, 0), re(4.0 * c * c)),
        ((2, 1, 1), re(-4.0 * s.powi(4))),
        ((1, 2, 3), im(4.0 * s.powi(3) * c)),
        ((1, 3, 2), im(4.0 * s.powi(3) * c)),
        ((2, 1, 3), im(4.0 * s.powi(3) * c)),
        ((2, 3, 1), im(4.0 * s.powi(3) * c)),
        ((3, 1, 2), im(-4.0 * s * c.powi(3))),
        ((3, 2, 1), im(-4.0 * s * c.powi(3))),
    ];
    for (ijk, coeff) in g_phase {
        terms.push((ijk, coeff, v_phase));
    }

    let g_flip: [((usize, usize, usize), Complex64); 10] = [
        ((1, 0, 0), re(4.0 * c * c)),
        ((1, 1, 1), re(-s2t * s2t)),
        ((3, 1, 3), re(-s2t * s2t)),
        ((3, 3, 1), re(-s2t * s2t)),
        ((3, 1, 1), im(4.0 * s * c.powi(3))),
        ((1, 3, 3), re(4.0 * s.powi(4))),
        ((1, 1, 3), im(-4.0 * s.powi(3) * c)),
        ((1, 3, 1), im(-4.0 * s.powi(3) * c)),
        ((3, 3, 3), im(-4.0 * s.powi(3) * c)),
        ((3, 0, 0), im(2.0 * s2t)),
    ];
    for (ijk, coeff) in g_flip {
        terms.push((ijk, coeff, v_flip));
    }

    let g_flip_phase: [((usize, usize, usize), Complex64); 17] = [
        ((3, 0, 0), re(4.0 * c.powi(4))),
        ((1, 0, 0), im(4.0 * s * c.powi(3))),
        ((2, 1, 2), im(-4.0 * s * c.powi(3))),
        ((2, 2, 1), im(-4.0 * s * c.powi(3))),
        ((0, 0, 1), im(-4.0 * s.powi(3) * c)),
        ((0, 1, 0), im(-4.0 * s.powi(3) * c)),
        ((1, 2, 2), im(4.0 * s.powi(3) * c)),
        ((3, 2, 2), re(-4.0 * s.powi(4))),
        ((0, 0, 3), re(-s2t * s2t)),
        ((0, 3, 0), re(-s2t * s2t)),
        ((1, 1, 3), re(-s2t * s2t)),
        ((1, 3, 1), re(-s2t * s2t)),
        ((2, 2, 3), re(s2t * s2t)),
        ((2, 3, 2), re(s2t * s2t)),
        ((3, 1, 1), re(-s2t * s2t)),
        ((3, 3, 3), re(s2t * s2t)),
        ((1, 1, 1), im(s4t)),
    ];
    for (ijk, coeff) in g_flip_phase {
        terms.push((ijk, coeff, v_flip_phase));
    }

    let bells: Vec<StateVector> = (0..4).map(|i| bell_state(i).unwrap()).collect();
    let eighth = Complex64::new(0.125, 0.0);
    let mut amps = vec![Complex64::ZERO; 1 << PROTOCOL_QUBITS];
    for ((i, j, k), coeff, bob) in terms {
        for q0 in 0..2usize {
            for q5 in 0..2usize {
                let ci = bells[i].amplitude((q0 << 1) | q5);
                if ci == Complex64::ZERO {
                    continue;
                }
                for q1 in 0..2usize {
                    for q4 in 0..2usize {
                        let cj = bells[j].amplitude((q1 << 1) | q4);
                        if cj == Complex64::ZERO {
                            continue;
                        }
                        for q2 in 0..2usize {
                            for q3 in 0..2usize {
                                let ck = bells[k].amplitude((q2 << 1) | q3);
                                if ck == Complex64::ZERO {
                                    continue;
                                }
                                let base = coeff * ci * cj * ck * eighth;
                                for (q6, amp) in bob.iter().enumerate() {
                                    if *amp == Complex64::ZERO {
                                        continue;
                                    }
                                    let idx = basis_index([q0, q1, q2, q3, q4, q5, q6]);
                                    amps[idx] += base * amp;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    StateVector::new(PROTOCOL_QUBITS, amps)
}
