//! Running a configuration: dependency-aware suite scheduling, exit codes and
//! the `report.json` / `tail_norms.csv` artifacts.

use std::fs;
use std::io;
use std::path::Path;

use qiso_core::report::{CheckRecord, Status};
use serde::Serialize;

use crate::config::{RunConfig, Suite};
use crate::suites::{run_suite, CheckKind, TimedRecord};

/// Every check passed (skips included).
pub const EXIT_OK: i32 = 0;
/// At least one numeric check exceeded its tolerance; no symbolic failures.
pub const EXIT_NUMERIC_FAILURE: i32 = 1;
/// At least one symbolic (exact) identity failed.
pub const EXIT_SYMBOLIC_FAILURE: i32 = 2;
/// The configuration was rejected before any suite ran.
pub const EXIT_CONFIG: i32 = 3;
/// An artifact could not be written.
pub const EXIT_IO: i32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub records: Vec<TimedRecord>,
    pub summary: Summary,
    /// Tail norms of the non-compactness commutator, when that suite ran.
    #[serde(skip)]
    pub tail_norms: Option<Vec<f64>>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    /// Largest finite residual among the non-skipped records.
    pub fn max_residual(&self) -> f64 {
        self.records
            .iter()
            .filter(|r| r.record.status != Status::Skip && r.record.residual.is_finite())
            .map(|r| r.record.residual)
            .fold(0.0, f64::max)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.records
            .iter()
            .filter(|r| r.record.status == Status::Fail)
            .map(|r| r.record.check_id.as_str())
            .collect()
    }

    pub fn record(&self, check_id: &str) -> Option<&TimedRecord> {
        self.records.iter().find(|r| r.record.check_id == check_id)
    }
}

fn exit_code_for(records: &[TimedRecord]) -> i32 {
    let failed = |kind| records.iter().any(|r| r.kind == kind && r.record.status == Status::Fail);
    if failed(CheckKind::Symbolic) {
        EXIT_SYMBOLIC_FAILURE
    } else if failed(CheckKind::Numeric) {
        EXIT_NUMERIC_FAILURE
    } else {
        EXIT_OK
    }
}

/// Runs the selected suites in dependency order. A suite is skipped when a
/// suite it depends on was skipped or had a symbolic failure; dependencies
/// that were not selected are not required.
pub fn run(cfg: &RunConfig) -> Result<Report, crate::config::ConfigError> {
    cfg.validate()?;
    let t = cfg.truncation()?;
    let mut records: Vec<TimedRecord> = Vec::new();
    let mut blocked: Vec<Suite> = Vec::new();
    let mut tail_norms = None;
    for &suite in &cfg.suites {
        if let Some(dep) = suite.dependencies().iter().find(|d| blocked.contains(d)) {
            blocked.push(suite);
            records.push(TimedRecord {
                record: CheckRecord::skipped(
                    format!("{suite}.skipped"),
                    format!("all checks of the {suite} suite"),
                    format!("dependency `{dep}` failed or was skipped"),
                ),
                suite,
                kind: CheckKind::Symbolic,
                runtime_ms: 0.0,
            });
            continue;
        }
        let out = run_suite(suite, cfg, &t);
        if out
            .records
            .iter()
            .any(|r| r.kind == CheckKind::Symbolic && r.record.status == Status::Fail)
        {
            blocked.push(suite);
        }
        if out.tail_norms.is_some() {
            tail_norms = out.tail_norms;
        }
        records.extend(out.records);
    }
    let count = |s: Status| records.iter().filter(|r| r.record.status == s).count();
    let summary = Summary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        exit_code: exit_code_for(&records),
    };
    Ok(Report {
        config: cfg.clone(),
        records,
        summary,
        tail_norms,
    })
}

/// Writes `report.json` and `tail_norms.csv` into `dir`. The CSV always has
/// its header; rows appear only when the non-compactness suite ran.
pub fn write_artifacts(report: &Report, dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let json = serde_json::to_string_pretty(report).map_err(io::Error::other)?;
    fs::write(dir.join("report.json"), json + "\n")?;
    let mut w = csv::Writer::from_path(dir.join("tail_norms.csv"))?;
    w.write_record(["k", "tail_norm", "theta", "mu", "c", "M"])?;
    let cfg = &report.config;
    for (k, v) in report.tail_norms.iter().flatten().enumerate() {
        w.write_record([
            k.to_string(),
            v.to_string(),
            cfg.theta.to_string(),
            cfg.mu.to_string(),
            cfg.c.to_string(),
            cfg.m.to_string(),
        ])?;
    }
    w.flush()
}

/// One line per record, for the terminal.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.records {
        let status = match r.record.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        out.push_str(&format!("{status}  {:<48} residual {:.3e}\n", r.record.check_id, r.record.residual));
    }
    let s = &report.summary;
    out.push_str(&format!(
        "{} passed, {} failed, {} skipped; exit code {}\n",
        s.passed, s.failed, s.skipped, s.exit_code
    ));
    out
}
