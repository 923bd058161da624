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

//! Per-run fidelity reports and their flat CSV/JSON forms.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::state::PROB_CUTOFF;
use crate::teleport::{weighted_average, MeasurementPair, SecretState};

/// How a report's numbers were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportSource {
    /// Closed-form probabilities and fidelities.
    Analytic,
    /// Exact statevector simulation of the circuit.
    Circuit,
    /// Outcome frequencies sampled shot by shot; per-outcome fidelities
    /// stay exact, so sampling noise enters only through the weights.
    Shots,
}

impl ReportSource {
    pub fn label(&self) -> &'static str {
        match self {
            ReportSource::Analytic => "ANALYTIC",
            ReportSource::Circuit => "CIRCUIT",
            ReportSource::Shots => "SHOTS",
        }
    }
}

impl std::fmt::Display for ReportSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Outcome probabilities and squared fidelities for one protocol run.
///
/// `fsq_raw[j]` compares the receiver's qubit before correction,
/// `fsq_corrected[j]` after; entries are `None` for outcomes whose
/// probability is below the cutoff (the fidelity of a branch that never
/// occurs is undefined, not zero). `favg_sq` weights the corrected
/// values (raw for outcome 0) by probability.
#[derive(Debug, Clone)]
pub struct FidelityReport {
    pub theta: f64,
    pub alpha: f64,
    pub phi: f64,
    pub pair: MeasurementPair,
    pub source: ReportSource,
    pub probabilities: [f64; 4],
    pub fsq_raw: [Option<f64>; 4],
    pub fsq_corrected: [Option<f64>; 4],
    pub favg_sq: f64,
    pub shots: Option<u64>,
    pub seed: Option<u64>,
}

impl FidelityReport {
    pub const CSV_HEADER: &'static str =
        "theta,alpha,phi,pair,source,p0,p1,p2,p3,fsq0,fsq1,fsq2,fsq3,favg_sq,shots,seed";

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        theta: f64,
        secret: &SecretState,
        pair: MeasurementPair,
        source: ReportSource,
        probabilities: [f64; 4],
        fsq_raw: [Option<f64>; 4],
        fsq_corrected: [Option<f64>; 4],
        shots: Option<u64>,
        seed: Option<u64>,
    ) -> Self {
        let favg_sq = weighted_average(&probabilities, &fsq_raw, &fsq_corrected);
        FidelityReport {
            theta,
            alpha: secret.alpha(),
            phi: secret.phi(),
            pair,
            source,
            probabilities,
            fsq_raw,
            fsq_corrected,
            favg_sq,
            shots,
            seed,
        }
    }

    /// One CSV row matching [`CSV_HEADER`]; numbers print with six
    /// decimals, undefined fidelities and absent shot metadata print as
    /// empty fields.
    ///
    /// [`CSV_HEADER`]: FidelityReport::CSV_HEADER
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| match v {
            Some(x) => format!("{x:.6}"),
            None => String::new(),
        };
        let int = |v: Option<u64>| match v {
            Some(x) => x.to_string(),
            None => String::new(),
        };
        format!(
            "{:.6},{:.6},{:.6},{},{},{:.6},{:.6},{:.6},{:.6},{},{},{},{},{:.6},{},{}",
            self.theta,
            self.alpha,
            self.phi,
            self.pair.label(),
            self.source.label(),
            self.probabilities[0],
            self.probabilities[1],
            self.probabilities[2],
            self.probabilities[3],
            opt(self.fsq_raw[0]),
            opt(self.fsq_raw[1]),
            opt(self.fsq_raw[2]),
            opt(self.fsq_raw[3]),
            self.favg_sq,
            int(self.shots),
            int(self.seed),
        )
    }

    /// Largest difference between two reports over probabilities, both
    /// fidelity arrays and the average.
    ///
    /// A defined-vs-undefined mismatch counts as infinite unless the
    /// branch probability is negligible on both sides, in which case the
    /// branch is skipped entirely.
    pub fn max_field_diff(&self, other: &FidelityReport) -> f64 {
        let mut dev: f64 = (self.favg_sq - other.favg_sq).abs();
        for j in 0..4 {
            dev = dev.max((self.probabilities[j] - other.probabilities[j]).abs());
            let negligible =
                self.probabilities[j] < PROB_CUTOFF && other.probabilities[j] < PROB_CUTOFF;
            if negligible {
                continue;
            }
            for (a, b) in [
                (self.fsq_raw[j], other.fsq_raw[j]),
                (self.fsq_corrected[j], other.fsq_corrected[j]),
            ] {
                dev = match (a, b) {
                    (Some(x), Some(y)) => dev.max((x - y).abs()),
                    (None, None) => dev,
                    _ => f64::INFINITY,
                };
            }
        }
        dev
    }
}

impl Serialize for FidelityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FidelityReport", 24)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("phi", &self.phi)?;
        st.serialize_field("pair", self.pair.label())?;
        st.serialize_field("source", self.source.label())?;
        st.serialize_field("p0", &self.probabilities[0])?;
        st.serialize_field("p1", &self.probabilities[1])?;
        st.serialize_field("p2", &self.probabilities[2])?;
        st.serialize_field("p3", &self.probabilities[3])?;
        st.serialize_field("fsq0", &self.fsq_raw[0])?;
        st.serialize_field("fsq1", &self.fsq_raw[1])?;
        st.serialize_field("fsq2", &self.fsq_raw[2])?;
        st.serialize_field("fsq3", &self.fsq_raw[3])?;
        st.serialize_field("fsq_corr0", &self.fsq_corrected[0])?;
        st.serialize_field("fsq_corr1", &self.fsq_corrected[1])?;
        st.serialize_field("fsq_corr2", &self.fsq_corrected[2])?;
        st.serialize_field("fsq_corr3", &self.fsq_corrected[3])?;
        st.serialize_field("favg_sq", &self.favg_sq)?;
        st.serialize_field("shots", &self.shots)?;
        st.serialize_field("seed", &self.seed)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::teleport::circuit_fidelities;

    #[test]
    fn csv_row_has_header_arity_and_blank_undefined() {
        let secret = SecretState::new(1.0 / 3.0f64.sqrt(), 0.0).unwrap();
        let report = circuit_fidelities(&secret, 0.0, MeasurementPair::Pair23).unwrap();
        let row = report.csv_row();
        assert_eq!(
            row.split(',').count(),
            FidelityReport::CSV_HEADER.split(',').count()
        );
        // Outcomes 1..3 are impossible at theta = 0: blank fsq fields.
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[10], "");
        assert_eq!(fields[11], "");
        assert_eq!(fields[12], "");
        assert!((report.favg_sq - 0.5).abs() < 1e-9);
    }

    #[test]
    fn json_is_flat_with_expected_keys() {
        let secret = SecretState::new(0.8, 1.0).unwrap();
        let report = circuit_fidelities(&secret, 0.7, MeasurementPair::Pair05).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["pair"], "05");
        assert_eq!(json["source"], "CIRCUIT");
        assert!(json["p0"].is_f64());
        assert!(json["fsq_corr2"].is_f64());
        assert!(json["shots"].is_null());
    }

    #[test]
    fn field_diff_detects_divergence() {
        let secret = SecretState::new(0.6, 0.3).unwrap();
        let a = circuit_fidelities(&secret, 0.9, MeasurementPair::Pair23).unwrap();
        let mut b = a.clone();
        assert!(a.max_field_diff(&b) < 1e-15);
        b.favg_sq += 1e-3;
        assert!(a.max_field_diff(&b) > 0.9e-3);
    }
}
