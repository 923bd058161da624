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

//! Seeded shot experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{FidelityReport, ReportSource};
use crate::teleport::{circuit_fidelities, MeasurementPair, SecretState};

/// Sample `shots` Bell-measurement outcomes from the exact distribution
/// and weight the exact per-outcome fidelities by the empirical
/// frequencies.
///
/// The post-measurement states are computed exactly, so shot noise
/// enters the average fidelity only through the sampled outcome counts.
/// The same seed always reproduces the same report.
pub fn shot_experiment(
    secret: &SecretState,
    theta: f64,
    pair: MeasurementPair,
    shots: u64,
    seed: u64,
) -> Result<FidelityReport> {
    if shots == 0 {
        return Err(Error::InvalidArgument(
            "shot count must be at least 1".into(),
        ));
    }
    let exact = circuit_fidelities(secret, theta, pair)?;

    let mut cumulative = [0.0f64; 4];
    let mut acc = 0.0;
    for (slot, p) in cumulative.iter_mut().zip(exact.probabilities) {
        acc += p;
        *slot = acc;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = [0u64; 4];
    for _ in 0..shots {
        let u: f64 = rng.random();
        let outcome = cumulative.iter().position(|&c| u < c).unwrap_or(3);
        counts[outcome] += 1;
    }

    let mut frequencies = [0.0f64; 4];
    for (f, &c) in frequencies.iter_mut().zip(&counts) {
        *f = c as f64 / shots as f64;
    }

    Ok(FidelityReport::from_parts(
        exact.theta,
        secret,
        pair,
        ReportSource::Shots,
        frequencies,
        exact.fsq_raw,
        exact.fsq_corrected,
        Some(shots),
        Some(seed),
    ))
}
