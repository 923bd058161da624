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

//! Closed-form layer of the protocol.
//!
//! Outcome probabilities, the receiver's Bloch vectors and the squared
//! fidelities all admit trigonometric closed forms in the scrambling
//! angle. This module evaluates them directly, with no statevector in
//! sight, so that the circuit simulation and the formulas can serve as
//! independent cross-checks of one another.
//!
//! For the measurement pair (0,5) one correction is applied to the
//! published algebra: the second fidelity's phi-dependent weight uses
//! this pair's own outcome probability, not the same-index probability
//! of the (2,3) family — the general (phase-free) form of that fidelity
//! fixes the coefficient unambiguously, and the circuit agrees.

use crate::density::BlochVector;
use crate::error::{Error, Result};
use crate::report::{FidelityReport, ReportSource};
use crate::scrambler::ScramblerParams;
use crate::state::PROB_CUTOFF;
use crate::teleport::{MeasurementPair, SecretState};

/// The fifteen trigonometric coefficients behind the Bloch vectors and
/// fidelities: `a`..`d2` for the (2,3)/(1,4) measurement family, `x1`..
/// `z3` for the (0,5) family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticCoefficients {
    pub a: f64,
    pub a_plus: f64,
    pub a_minus: f64,
    pub b1: f64,
    pub b2: f64,
    pub c: f64,
    pub d1: f64,
    pub d2: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub y1: f64,
    pub y3: f64,
    pub z1: f64,
    pub z3: f64,
}

/// Evaluate all fifteen coefficients at one angle.
pub fn analytic_coefficients(theta: f64) -> Result<AnalyticCoefficients> {
    let theta = ScramblerParams::new(theta)?.theta();
    let (s, c) = theta.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let cos2t = (2.0 * theta).cos();
    let cos4t = (4.0 * theta).cos();
    let cos8t = (8.0 * theta).cos();
    let sin2t = (2.0 * theta).sin();
    let sin3t = (3.0 * theta).sin();
    let sin4t = (4.0 * theta).sin();

    Ok(AnalyticCoefficients {
        a: 0.5 * s2 * c2 * c2,
        a_plus: 0.25 * (1.0 + c2 * c2),
        a_minus: 0.25 * (1.0 - c2 * c2),
        b1: s2 * (3.0 + cos4t) / 16.0,
        b2: sin4t * sin4t / 64.0,
        c: sin2t * sin2t / 16.0,
        d1: 0.5 * s2 * s2 * c2,
        d2: s2 * s2 * (1.0 + 4.0 * cos2t + cos4t) / 8.0,
        x1: 0.5 * s2 * s2 * c2,
        x2: 0.5 * s2 * c2 * c2,
        x3: 0.5 * s2 * c2 * c2,
        y1: (3.0 + cos4t) * (3.0 + cos4t) / 64.0,
        y3: -(11.0 + 20.0 * cos4t + cos8t) / 128.0,
        z1: c * c2 * (s - sin3t) / 4.0,
        z3: sin4t * c2 / 8.0,
    })
}

/// Closed-form outcome probabilities for a measurement pair.
pub fn outcome_probabilities(pair: MeasurementPair, theta: f64) -> Result<[f64; 4]> {
    let theta = ScramblerParams::new(theta)?.theta();
    let s2 = theta.sin().powi(2);
    let cos2t = (2.0 * theta).cos();
    let cos4t = (4.0 * theta).cos();
    let cos6t = (6.0 * theta).cos();
    let cos8t = (8.0 * theta).cos();

    let probs = match pair {
        MeasurementPair::Pair23 | MeasurementPair::Pair14 => [
            (36.0 + 23.0 * cos2t + 4.0 * cos4t + cos6t) / 64.0,
            s2 * (16.0 + 11.0 * cos2t + 4.0 * cos4t + cos6t) / 32.0,
            s2 * (5.0 + 2.0 * cos2t + cos4t) / 16.0,
            s2 * s2 * (7.0 + 6.0 * cos2t + cos4t) / 8.0,
        ],
        MeasurementPair::Pair05 => {
            let c2 = theta.cos().powi(2);
            [
                (1.0 + 2.0 * s2 * s2 * c2) / 4.0,
                (33.0 - 2.0 * cos2t + 2.0 * cos6t - cos8t) / 128.0,
                (c2 * c2 + s2.powi(4) + 2.0 * s2 * c2 - s2 * s2 * c2 * c2) / 4.0,
                (31.0 + 2.0 * cos2t - 2.0 * cos6t + cos8t) / 128.0,
            ]
        }
    };
    Ok(probs)
}

/// Bloch vector of the secret `alpha |0> + beta |1>` itself:
/// `(alpha beta* + alpha* beta, i(alpha beta* - alpha* beta),
/// |alpha|^2 - |beta|^2)`.
fn secret_bloch(secret: &SecretState) -> (f64, f64, f64) {
    let alpha = secret.alpha();
    let beta = secret.beta();
    let ab = alpha * beta.conj();
    // i(ab - conj(ab)) = -2 Im(ab).
    let n = 2.0 * ab.re;
    let m = -2.0 * ab.im;
    let t = alpha * alpha - beta.norm_sqr();
    (n, m, t)
}

/// Closed-form Bloch vector of the receiver's uncorrected qubit for one
/// outcome.
pub fn bob_bloch_raw(
    secret: &SecretState,
    theta: f64,
    pair: MeasurementPair,
    outcome: usize,
) -> Result<BlochVector> {
    if outcome > 3 {
        return Err(Error::InvalidArgument(format!(
            "outcome {outcome} not in 0..=3"
        )));
    }
    let k = analytic_coefficients(theta)?;
    let p = outcome_probabilities(pair, theta)?;
    let (n, m, t) = secret_bloch(secret);
    let pj = p[outcome];
    if pj < PROB_CUTOFF {
        return Err(Error::InvalidState(format!(
            "outcome {outcome} has vanishing probability at theta = {theta}"
        )));
    }

    let (s1, s2, s3) = match pair {
        MeasurementPair::Pair23 | MeasurementPair::Pair14 => match outcome {
            0 => (
                (k.a + k.a_minus) / pj * n,
                (k.a_minus - k.a) / pj * m,
                (2.0 * k.a_plus - pj) / pj * t,
            ),
            1 => (
                -(k.b1 + k.b2) / pj * n,
                -(k.b1 - k.b2) / pj * m,
                (2.0 * k.b1 - pj) / pj * t,
            ),
            2 => (-n, -(2.0 * k.c - pj) / pj * m, (2.0 * k.c - pj) / pj * t),
            _ => (
                -(k.d1 + k.d2) / pj * n,
                -(k.d1 - k.d2) / pj * m,
                (2.0 * k.d1 - pj) / pj * t,
            ),
        },
        MeasurementPair::Pair05 => match outcome {
            0 => {
                let w = (1.0 - 2.0 * pj) / (2.0 * pj);
                (w * n, m, w * t)
            }
            1 => (
                ((k.y1 - k.x1) * n - k.z1 * m) / pj,
                (-(k.y1 + k.x1) * m - k.z1 * n) / pj,
                (2.0 * k.x1 - pj) / pj * t,
            ),
            2 => (-n, -(pj - 2.0 * k.x2) / pj * m, -(2.0 * k.x2 - pj) / pj * t),
            _ => (
                ((k.y3 - k.x3) * n - k.z3 * m) / pj,
                (-(k.y3 + k.x3) * m - k.z3 * n) / pj,
                (2.0 * k.x3 - pj) / pj * t,
            ),
        },
    };
    BlochVector::new(s1, s2, s3)
}

/// Closed-form fidelity report.
///
/// Both fidelity arrays are filled: the uncorrected values from the
/// direct formulas (pairs (2,3)/(1,4)) or through the Bloch overlap
/// `(1 + s_secret . s_bob)/2` (pair (0,5), whose uncorrected forms are
/// not published), and the corrected values from their closed forms.
pub fn analytic_fidelities(
    secret: &SecretState,
    theta: f64,
    pair: MeasurementPair,
) -> Result<FidelityReport> {
    let theta = ScramblerParams::new(theta)?.theta();
    let k = analytic_coefficients(theta)?;
    let p = outcome_probabilities(pair, theta)?;

    let alpha = secret.alpha();
    let asq = alpha * alpha;
    let bsq = 1.0 - asq;
    // alpha^4 + |beta|^4 and 2 alpha^2 |beta|^2, the two symmetric weights.
    let quartic = asq * asq + bsq * bsq;
    let cross = asq * bsq;
    let cos2p = (2.0 * secret.phi()).cos();

    let mut fsq_raw: [Option<f64>; 4] = [None; 4];
    let mut fsq_corrected: [Option<f64>; 4] = [None; 4];

    match pair {
        MeasurementPair::Pair23 | MeasurementPair::Pair14 => {
            let raw = [
                (k.a_plus * quartic + 2.0 * cross * (p[0] + k.a_minus - k.a_plus + k.a * cos2p))
                    / p[0],
                (k.b1 * quartic + 2.0 * cross * (p[1] - 2.0 * k.b1 - k.b2 * cos2p)) / p[1],
                (k.c * quartic + 2.0 * cross * (p[2] - 2.0 * k.c - (p[2] - k.c) * cos2p)) / p[2],
                (k.d1 * quartic + 2.0 * cross * (p[3] - 2.0 * k.d1 - k.d2 * cos2p)) / p[3],
            ];
            let corrected = [
                raw[0],
                (k.b1 * quartic + 2.0 * cross * (p[1] + k.b2 * cos2p)) / p[1],
                ((p[2] - k.c) * quartic + 2.0 * cross * (p[2] + k.c * cos2p)) / p[2],
                ((p[3] - k.d1) * quartic + 2.0 * cross * (k.d1 - k.d2 - k.d1 * cos2p)) / p[3],
            ];
            for j in 0..4 {
                if p[j] >= PROB_CUTOFF {
                    fsq_raw[j] = Some(raw[j]);
                    fsq_corrected[j] = Some(corrected[j]);
                }
            }
        }
        MeasurementPair::Pair05 => {
            let f0 =
                (quartic + 2.0 * cross * (4.0 * p[0] + (1.0 - 4.0 * p[0]) * cos2p)) / (4.0 * p[0]);
            let corrected = [
                f0,
                ((p[1] - k.x1) * quartic + 2.0 * cross * (k.x1 + k.y1 - k.x1 * cos2p)) / p[1],
                ((p[2] - k.x2) * quartic + 2.0 * cross * (p[2] + k.x2 * cos2p)) / p[2],
                ((p[3] - k.x3) * quartic + 2.0 * cross * (k.x3 - k.y3 + k.x3 * cos2p)) / p[3],
            ];
            let (sn, sm, st) = secret_bloch(secret);
            for j in 0..4 {
                if p[j] < PROB_CUTOFF {
                    continue;
                }
                fsq_corrected[j] = Some(corrected[j]);
                if j == 0 {
                    fsq_raw[0] = Some(f0);
                } else {
                    let b = bob_bloch_raw(secret, theta, pair, j)?;
                    fsq_raw[j] = Some(0.5 * (1.0 + sn * b.s1 + sm * b.s2 + st * b.s3));
                }
            }
        }
    }

    Ok(FidelityReport::from_parts(
        theta,
        secret,
        pair,
        ReportSource::Analytic,
        p,
        fsq_raw,
        fsq_corrected,
        None,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn canonical_secret() -> SecretState {
        SecretState::new(1.0 / 3.0f64.sqrt(), 0.0).unwrap()
    }

    #[test]
    fn coefficients_at_zero() {
        let k = analytic_coefficients(0.0).unwrap();
        assert!((k.a_plus - 0.5).abs() < 1e-15);
        for v in [k.a, k.a_minus, k.b1, k.b2, k.c, k.d1, k.d2] {
            assert!(v.abs() < 1e-15);
        }
    }

    #[test]
    fn coefficients_at_right_angle() {
        let k = analytic_coefficients(FRAC_PI_2).unwrap();
        assert!((k.a_plus - 0.25).abs() < 1e-15);
        assert!((k.a_minus - 0.25).abs() < 1e-15);
        assert!(k.d1.abs() < 1e-15);
        assert!(k.x1.abs() < 1e-30);
    }

    #[test]
    fn coefficient_c_at_quarter_angle() {
        let k = analytic_coefficients(FRAC_PI_4).unwrap();
        assert!((k.c - 1.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn probabilities_sum_to_one() {
        for i in 0..=200 {
            let theta = FRAC_PI_2 * i as f64 / 200.0;
            for pair in MeasurementPair::ALL {
                let p = outcome_probabilities(pair, theta).unwrap();
                assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn uniform_probabilities_at_maximal_scrambling() {
        let p = outcome_probabilities(MeasurementPair::Pair23, FRAC_PI_2).unwrap();
        for v in p {
            assert!((v - 0.25).abs() < 1e-14);
        }
    }

    #[test]
    fn second_outcome_probability_at_third_angle() {
        // 1/128 (33 - 2 cos(2 pi/3) + 2 cos(2 pi) - cos(8 pi/3)).
        let q = outcome_probabilities(MeasurementPair::Pair05, FRAC_PI_3).unwrap();
        let expect = (33.0 - 2.0 * (2.0 * FRAC_PI_3).cos()
            + 2.0 * (2.0 * std::f64::consts::PI).cos()
            - (8.0 * FRAC_PI_3).cos())
            / 128.0;
        assert!((q[1] - expect).abs() < 1e-15);
    }

    #[test]
    fn bloch_first_component_at_quarter_angle() {
        // Outcome (1,0) has s1 = -(alpha beta* + alpha* beta) = -2 sqrt(2)/3.
        let b = bob_bloch_raw(&canonical_secret(), FRAC_PI_4, MeasurementPair::Pair23, 2).unwrap();
        let expect = -2.0 * 2.0f64.sqrt() / 3.0;
        assert!((b.s1 - expect).abs() < 1e-14);
    }

    #[test]
    fn average_fidelity_endpoints() {
        let s = canonical_secret();
        let r = analytic_fidelities(&s, 0.0, MeasurementPair::Pair23).unwrap();
        assert!((r.favg_sq - 0.5).abs() < 1e-12);
        let r = analytic_fidelities(&s, FRAC_PI_2, MeasurementPair::Pair23).unwrap();
        assert!((r.favg_sq - 1.0).abs() < 1e-12);
        let r = analytic_fidelities(&s, 0.0, MeasurementPair::Pair05).unwrap();
        assert!((r.favg_sq - 1.0).abs() < 1e-12);
        let r = analytic_fidelities(&s, FRAC_PI_2, MeasurementPair::Pair05).unwrap();
        assert!((r.favg_sq - 1.0).abs() < 1e-12);
    }

    #[test]
    fn published_average_fidelity_spot_values() {
        // One value from each published reference column.
        let cases = [
            (1.5, 0.0, MeasurementPair::Pair23, 0.99446, 5e-5),
            (FRAC_PI_4, 0.5, MeasurementPair::Pair23, 0.66084, 5e-5),
            (0.9, 0.0, MeasurementPair::Pair05, 0.683556, 5e-6),
            (FRAC_PI_3, 1.5, MeasurementPair::Pair05, 0.801666, 5e-6),
        ];
        for (theta, phi, pair, expect, tol) in cases {
            let secret = SecretState::new(1.0 / 3.0f64.sqrt(), phi).unwrap();
            let favg = analytic_fidelities(&secret, theta, pair).unwrap().favg_sq;
            assert!(
                (favg - expect).abs() < tol,
                "theta {theta} phi {phi} pair {pair}: {favg} vs {expect}"
            );
        }
    }

    #[test]
    fn undefined_branches_at_zero_angle() {
        let r = analytic_fidelities(&canonical_secret(), 0.0, MeasurementPair::Pair23).unwrap();
        assert!(r.fsq_raw[0].is_some());
        for j in 1..4 {
            assert!(r.fsq_raw[j].is_none());
            assert!(r.fsq_corrected[j].is_none());
        }
    }
}
