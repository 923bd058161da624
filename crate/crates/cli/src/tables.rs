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

//! The four reference average-fidelity tables, recomputed from the
//! closed forms and written as `key,theory` CSV files, plus the exact
//! endpoint values per measurement pair.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
use std::path::Path;

use scrteleport_core::{analytic_fidelities, MeasurementPair, SecretState};

use crate::config::FileConfig;
use crate::{CliError, TablesArgs};

const CANONICAL_ALPHA: f64 = 0.577_350_269_189_625_8; // 1/sqrt(3)

fn favg(theta: f64, phi: f64, pair: MeasurementPair) -> Result<f64, CliError> {
    let secret = SecretState::new(CANONICAL_ALPHA, phi)?;
    Ok(analytic_fidelities(&secret, theta, pair)?.favg_sq)
}

/// Theta rows 0.1 .. 1.5 for one pair, `key,theory` lines.
fn theta_table(pair: MeasurementPair) -> Result<Vec<String>, CliError> {
    let mut lines = vec!["key,theory".to_string()];
    for i in 1..=15 {
        let theta = i as f64 * 0.1;
        lines.push(format!("{theta:.1},{:.6}", favg(theta, 0.0, pair)?));
    }
    Ok(lines)
}

/// Phi rows 0.5 .. 3.5 at a fixed angle for one pair.
fn phi_table(theta: f64, pair: MeasurementPair) -> Result<Vec<String>, CliError> {
    let mut lines = vec!["key,theory".to_string()];
    for i in 1..=7 {
        let phi = i as f64 * 0.5;
        lines.push(format!("{phi:.1},{:.6}", favg(theta, phi, pair)?));
    }
    Ok(lines)
}

/// Average fidelity at the no-scrambling and maximal-scrambling
/// endpoints for every pair.
fn endpoint_table() -> Result<Vec<String>, CliError> {
    let mut lines = vec!["pair,theta,theory".to_string()];
    for pair in MeasurementPair::ALL {
        for theta in [0.0, FRAC_PI_2] {
            lines.push(format!(
                "{},{theta:.6},{:.6}",
                pair.label(),
                favg(theta, 0.0, pair)?
            ));
        }
    }
    Ok(lines)
}

fn write_lines(dir: &Path, name: &str, lines: Vec<String>) -> Result<(), CliError> {
    let path = dir.join(name);
    std::fs::write(&path, lines.join("\n") + "\n")
        .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn cmd_tables(args: TablesArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let dir = args
        .out
        .or_else(|| cfg.out.clone())
        .unwrap_or_else(|| ".".into());
    std::fs::create_dir_all(&dir)
        .map_err(|e| CliError::Io(format!("creating {}: {e}", dir.display())))?;

    write_lines(&dir, "table4.csv", theta_table(MeasurementPair::Pair23)?)?;
    write_lines(
        &dir,
        "table5.csv",
        phi_table(FRAC_PI_4, MeasurementPair::Pair23)?,
    )?;
    write_lines(&dir, "table6.csv", theta_table(MeasurementPair::Pair05)?)?;
    write_lines(
        &dir,
        "table7.csv",
        phi_table(FRAC_PI_3, MeasurementPair::Pair05)?,
    )?;
    write_lines(&dir, "endpoints.csv", endpoint_table()?)?;
    Ok(())
}
