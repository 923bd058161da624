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

//! Theory-vs-experiment error summary over two CSV columns.
//!
//! The headline metric is `mean(theory - experiment) * 100` over rows
//! matched by key; since published summaries of this kind sometimes mean
//! the absolute variant, both are reported.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::{CliError, ErrorArgs};

#[derive(Debug, Serialize)]
pub struct ErrorSummary {
    /// Number of matched rows.
    pub n: usize,
    /// `mean(theory - experiment) * 100`, sign kept.
    pub signed_mean_pct: f64,
    /// `mean(|theory - experiment|) * 100`.
    pub mean_abs_pct: f64,
}

/// Key -> value map from one CSV column. The key is the first column;
/// the value column is picked by name, defaulting to `theory` when
/// present and the second column otherwise.
fn read_column(path: &Path, column: Option<&str>) -> Result<BTreeMap<String, f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Usage(format!("{}: empty file", path.display())))?;
    let names: Vec<&str> = header.split(',').map(str::trim).collect();
    if names.len() < 2 {
        return Err(CliError::Usage(format!(
            "{}: need a key column and at least one value column",
            path.display()
        )));
    }
    let value_index = match column {
        Some(name) => names.iter().position(|&n| n == name).ok_or_else(|| {
            CliError::Usage(format!(
                "{}: no column '{name}' (have: {})",
                path.display(),
                names.join(", ")
            ))
        })?,
        None => names.iter().position(|&n| n == "theory").unwrap_or(1),
    };

    let mut map = BTreeMap::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() <= value_index {
            return Err(CliError::Usage(format!(
                "{} line {}: expected at least {} fields",
                path.display(),
                lineno + 2,
                value_index + 1
            )));
        }
        let value: f64 = fields[value_index].parse().map_err(|_| {
            CliError::Usage(format!(
                "{} line {}: '{}' is not a number",
                path.display(),
                lineno + 2,
                fields[value_index]
            ))
        })?;
        map.insert(fields[0].to_string(), value);
    }
    if map.is_empty() {
        return Err(CliError::Usage(format!("{}: no data rows", path.display())));
    }
    Ok(map)
}

pub fn compare(
    theory_path: &Path,
    theory_column: Option<&str>,
    experiment_path: &Path,
    experiment_column: Option<&str>,
) -> Result<ErrorSummary, CliError> {
    let theory = read_column(theory_path, theory_column)?;
    let experiment = read_column(experiment_path, experiment_column)?;

    let missing: Vec<String> = theory
        .keys()
        .filter(|k| !experiment.contains_key(*k))
        .chain(experiment.keys().filter(|k| !theory.contains_key(*k)))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(CliError::Usage(format!(
            "unmatched row keys: {}",
            missing.join(", ")
        )));
    }

    let n = theory.len();
    let mut signed = 0.0;
    let mut absolute = 0.0;
    for (key, t) in &theory {
        let e = experiment[key];
        signed += t - e;
        absolute += (t - e).abs();
    }
    Ok(ErrorSummary {
        n,
        signed_mean_pct: signed / n as f64 * 100.0,
        mean_abs_pct: absolute / n as f64 * 100.0,
    })
}

pub fn cmd_error(args: ErrorArgs) -> Result<(), CliError> {
    let summary = compare(
        &args.theory,
        args.theory_column.as_deref(),
        &args.experiment,
        args.experiment_column.as_deref(),
    )?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&summary).expect("summary serializes")
        );
    } else {
        println!("rows compared:       {}", summary.n);
        println!("signed mean (x100):  {:.6}", summary.signed_mean_pct);
        println!("mean absolute (x100): {:.6}", summary.mean_abs_pct);
    }
    Ok(())
}
