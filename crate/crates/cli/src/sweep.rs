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

//! Parameter sweeps over a worker pool.
//!
//! Grid points are independent pure computations; workers pull indices
//! from a shared counter and results are assembled by index, so the
//! output ordering never depends on scheduling. Shot seeds derive from
//! the base seed plus the grid index for the same reason.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use scrteleport_core::{
    analytic_fidelities, shot_experiment, FidelityReport, MeasurementPair, SecretState,
};

use crate::config::FileConfig;
use crate::{CliError, SweepArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Theta,
    Phi,
}

impl SweepVariable {
    fn parse(label: &str) -> Result<Self, CliError> {
        match label.to_ascii_lowercase().as_str() {
            "theta" => Ok(SweepVariable::Theta),
            "phi" => Ok(SweepVariable::Phi),
            other => Err(CliError::Usage(format!(
                "unknown sweep variable '{other}' (expected theta or phi)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub alpha: f64,
    pub fixed_phi: f64,
    pub fixed_theta: f64,
    pub pair: MeasurementPair,
    pub shots: Option<u64>,
    pub seed: u64,
}

impl SweepSpec {
    fn validate(&self) -> Result<(), CliError> {
        if self.points < 2 {
            return Err(CliError::Usage(format!(
                "sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        if !self.start.is_finite() || !self.stop.is_finite() || self.start >= self.stop {
            return Err(CliError::Usage(format!(
                "sweep needs finite start < stop, got {} .. {}",
                self.start, self.stop
            )));
        }
        Ok(())
    }

    fn grid_value(&self, index: usize) -> f64 {
        if index == self.points - 1 {
            self.stop
        } else {
            self.start + (self.stop - self.start) * index as f64 / (self.points - 1) as f64
        }
    }
}

struct SweepRow {
    analytic: FidelityReport,
    sampled: Option<FidelityReport>,
}

fn compute_row(spec: &SweepSpec, index: usize) -> Result<SweepRow, CliError> {
    let value = spec.grid_value(index);
    let (theta, phi) = match spec.variable {
        SweepVariable::Theta => (value, spec.fixed_phi),
        SweepVariable::Phi => (spec.fixed_theta, value),
    };
    let secret = SecretState::new(spec.alpha, phi)?;
    let analytic = analytic_fidelities(&secret, theta, spec.pair)?;
    let sampled = match spec.shots {
        Some(shots) => Some(shot_experiment(
            &secret,
            theta,
            spec.pair,
            shots,
            spec.seed + index as u64,
        )?),
        None => None,
    };
    Ok(SweepRow { analytic, sampled })
}

fn csv_header(with_shots: bool) -> String {
    let mut header = format!(
        "{},fsq_corr0,fsq_corr1,fsq_corr2,fsq_corr3",
        FidelityReport::CSV_HEADER
    );
    if with_shots {
        header.push_str(",shots_p0,shots_p1,shots_p2,shots_p3,shots_favg_sq");
    }
    header
}

fn csv_row(row: &SweepRow) -> String {
    let opt = |v: Option<f64>| match v {
        Some(x) => format!("{x:.6}"),
        None => String::new(),
    };
    let mut line = row.analytic.csv_row();
    for j in 0..4 {
        line.push(',');
        line.push_str(&opt(row.analytic.fsq_corrected[j]));
    }
    if let Some(sampled) = &row.sampled {
        for p in sampled.probabilities {
            line.push_str(&format!(",{p:.6}"));
        }
        line.push_str(&format!(",{:.6}", sampled.favg_sq));
    }
    line
}

pub fn run_sweep(spec: &SweepSpec, jobs: usize) -> Result<Vec<String>, CliError> {
    spec.validate()?;
    let workers = jobs.clamp(1, spec.points);
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<SweepRow, CliError>>>> =
        Mutex::new((0..spec.points).map(|_| None).collect());

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= spec.points {
                    break;
                }
                let result = compute_row(spec, index);
                slots.lock().expect("sweep mutex")[index] = Some(result);
            });
        }
    });

    let mut lines = vec![csv_header(spec.shots.is_some())];
    for slot in slots.into_inner().expect("sweep mutex") {
        let row = slot.expect("every index computed")?;
        lines.push(csv_row(&row));
    }
    Ok(lines)
}

pub fn cmd_sweep(args: SweepArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let variable = SweepVariable::parse(
        &args
            .var
            .or_else(|| cfg.var.clone())
            .unwrap_or_else(|| "theta".into()),
    )?;
    let (default_start, default_stop) = match variable {
        SweepVariable::Theta => (0.0, FRAC_PI_2),
        SweepVariable::Phi => (0.0, PI),
    };
    let spec = SweepSpec {
        variable,
        start: args.start.or(cfg.start).unwrap_or(default_start),
        stop: args.stop.or(cfg.stop).unwrap_or(default_stop),
        points: args.points.or(cfg.points).unwrap_or(50),
        alpha: args.alpha.or(cfg.alpha).unwrap_or(1.0 / 3.0f64.sqrt()),
        fixed_phi: args.phi.or(cfg.phi).unwrap_or(0.0),
        fixed_theta: args.theta.or(cfg.theta).unwrap_or(FRAC_PI_4),
        pair: MeasurementPair::from_label(
            &args
                .pair
                .or_else(|| cfg.pair.clone())
                .unwrap_or_else(|| "23".into()),
        )?,
        shots: args.shots.or(cfg.shots),
        seed: args.seed.or(cfg.seed).unwrap_or(0),
    };
    let jobs = args.jobs.or(cfg.jobs).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });

    let lines = run_sweep(&spec, jobs)?;
    let text = lines.join("\n") + "\n";
    match args.out.as_ref().or(cfg.out.as_ref()) {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?,
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("writing stdout: {e}")))?;
        }
    }
    Ok(())
}
