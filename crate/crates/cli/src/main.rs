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

//! `scrteleport` — sweeps, reference tables, scrambling reports and
//! self-verification for the scrambling teleportation simulator.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input
//! error, 3 I/O error.

mod checks;
mod config;
mod error_metric;
mod sweep;
mod tables;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::FileConfig;

/// Failure modes mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// A verification check failed (exit 1).
    Check(String),
    /// Bad flags or malformed input data (exit 2).
    Usage(String),
    /// Filesystem failure (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Check(m) => write!(f, "verification failed: {m}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<scrteleport_core::Error> for CliError {
    fn from(e: scrteleport_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "scrteleport",
    version,
    about = "Scrambling teleportation: sweeps, reference tables and verification",
    propagate_version = true
)]
struct Cli {
    /// JSON file supplying defaults for any flag; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the numerical self-verification suite and report per-check deviations.
    Verify(VerifyArgs),
    /// Sweep theta or phi and print one CSV row per grid point.
    Sweep(SweepArgs),
    /// Write the four reference fidelity tables (plus endpoints) as CSV files.
    Tables(TablesArgs),
    /// Compare a theory CSV column against an experiment CSV column.
    Error(ErrorArgs),
    /// Pauli-conjugation expansions of the partial scrambler at one angle.
    ScrambleReport(ScrambleReportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Angle grid point; repeat for more (default: 33 points over [0, pi/2]).
    #[arg(long = "theta", value_name = "RAD")]
    theta: Vec<f64>,
    /// Emit the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Corrupt one scrambler entry first (negative control for the checks).
    #[arg(long, hide = true)]
    corrupt_scrambler: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Swept variable: "theta" or "phi".
    #[arg(long, value_name = "VAR")]
    var: Option<String>,
    /// Grid start (default: 0).
    #[arg(long)]
    start: Option<f64>,
    /// Grid stop (default: pi/2 for theta, pi for phi).
    #[arg(long)]
    stop: Option<f64>,
    /// Number of grid points (>= 2).
    #[arg(long)]
    points: Option<usize>,
    /// Fixed theta for phi sweeps (default: pi/4).
    #[arg(long)]
    theta: Option<f64>,
    /// Secret amplitude alpha in [0, 1] (default: 1/sqrt(3)).
    #[arg(long)]
    alpha: Option<f64>,
    /// Fixed phase phi for theta sweeps (default: 0).
    #[arg(long)]
    phi: Option<f64>,
    /// Measurement pair: 23, 14 or 05 (default: 23).
    #[arg(long)]
    pair: Option<String>,
    /// Also sample this many shots per grid point.
    #[arg(long)]
    shots: Option<u64>,
    /// Base seed for shot sampling; point i uses seed + i (default: 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write CSV here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TablesArgs {
    /// Output directory (default: current directory).
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ErrorArgs {
    /// CSV with the reference column.
    theory: PathBuf,
    /// CSV with the experiment column.
    experiment: PathBuf,
    /// Column name in the theory file (default: "theory", else second column).
    #[arg(long, value_name = "NAME")]
    theory_column: Option<String>,
    /// Column name in the experiment file (default: "theory", else second column).
    #[arg(long, value_name = "NAME")]
    experiment_column: Option<String>,
    /// Emit the summary as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScrambleReportArgs {
    /// Scrambling angle in [0, pi/2].
    #[arg(long)]
    theta: Option<f64>,
    /// Emit the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let cfg = match config::load(cli.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args, &cfg),
        Command::Sweep(args) => sweep::cmd_sweep(args, &cfg),
        Command::Tables(args) => tables::cmd_tables(args, &cfg),
        Command::Error(args) => error_metric::cmd_error(args),
        Command::ScrambleReport(args) => cmd_scramble_report(args, &cfg),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn cmd_verify(args: VerifyArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let grid = if !args.theta.is_empty() {
        args.theta.clone()
    } else if let Some(grid) = &cfg.theta_grid {
        grid.clone()
    } else {
        checks::default_grid()
    };
    let report = checks::run_verification(&grid, args.corrupt_scrambler)?;

    if args.json || cfg.json.unwrap_or(false) {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        for check in &report.checks {
            println!(
                "{:<28} {}  max_dev {:.3e} (tol {:.1e})",
                check.name,
                if check.passed { "PASS" } else { "FAIL" },
                check.max_deviation,
                check.tolerance
            );
        }
    }
    if report.passed {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        Err(CliError::Check(failed.join(", ")))
    }
}

fn cmd_scramble_report(args: ScrambleReportArgs, cfg: &FileConfig) -> Result<(), CliError> {
    let theta = args
        .theta
        .or(cfg.theta)
        .ok_or_else(|| CliError::Usage("scramble-report needs --theta".into()))?;
    let report = scrteleport_core::scrambling_report(theta)?;

    let text = if args.json || cfg.json.unwrap_or(false) {
        serde_json::to_string_pretty(&report).expect("report serializes")
    } else {
        let mut lines = vec![format!("theta = {theta:.6}")];
        for row in &report.rows {
            lines.push(format!(
                "{}: {} terms, delocalization {:.6}",
                row.pauli,
                row.expansion.num_terms(),
                row.delocalization
            ));
        }
        lines.join("\n")
    };

    match args.out.as_ref().or(cfg.out.as_ref()) {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(())
}
