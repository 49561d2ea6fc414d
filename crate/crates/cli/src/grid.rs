//! Parameter sweeps: the Cartesian product of `mu`, `c`, `theta` and `M`
//! lists, run in parallel and summarised in `summary.csv`.

use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use crate::config::{ConfigError, RunConfig};
use crate::run::{run, write_artifacts, Report, EXIT_CONFIG, EXIT_IO};

/// Lists of parameter values; an absent list means "the template value".
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridFile {
    pub mu: Option<Vec<f64>>,
    pub c: Option<Vec<f64>>,
    pub theta: Option<Vec<f64>>,
    #[serde(rename = "M")]
    pub m: Option<Vec<usize>>,
}

impl GridFile {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        toml::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })
    }

    /// Grid points in `mu`, `c`, `theta`, `M` lexicographic order.
    pub fn points(&self, template: &RunConfig) -> Vec<RunConfig> {
        let or = |list: &Option<Vec<f64>>, v: f64| list.clone().unwrap_or_else(|| vec![v]);
        let ms = self.m.clone().unwrap_or_else(|| vec![template.m]);
        let mut out = Vec::new();
        for &mu in &or(&self.mu, template.mu) {
            for &c in &or(&self.c, template.c) {
                for &theta in &or(&self.theta, template.theta) {
                    for &m in &ms {
                        out.push(RunConfig {
                            mu,
                            c,
                            theta,
                            m,
                            ..template.clone()
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GridRow {
    pub index: usize,
    pub config: RunConfig,
    pub outcome: Result<Report, String>,
    /// Set when the point ran but its artifacts could not be written.
    pub io_error: Option<String>,
}

impl GridRow {
    pub fn exit_code(&self) -> i32 {
        match (&self.outcome, &self.io_error) {
            (Err(_), _) => EXIT_CONFIG,
            (Ok(_), Some(_)) => EXIT_IO,
            (Ok(r), None) => r.exit_code(),
        }
    }

    pub fn status(&self) -> &'static str {
        match &self.outcome {
            Err(_) => "config-invalid",
            Ok(_) if self.exit_code() == 0 => "ok",
            Ok(_) => "fail",
        }
    }

    /// `degenerate`, the smallest tail norm, or empty when the
    /// non-compactness suite did not run.
    pub fn noncompact(&self) -> String {
        let Ok(report) = &self.outcome else {
            return String::new();
        };
        if let Some(p) = report.record("noncompact.profile") {
            if p.record.details.get("degenerate").and_then(|d| d.as_bool()) == Some(true) {
                return "degenerate".into();
            }
        }
        match &report.tail_norms {
            Some(t) if !t.is_empty() => format!("{:.6e}", t.iter().copied().fold(f64::INFINITY, f64::min)),
            _ => String::new(),
        }
    }
}

/// Runs every grid point; each point's artifacts go to `point-<index>` under
/// the template's output directory. Rows come back in grid order.
pub fn run_grid(grid: &GridFile, template: &RunConfig) -> Vec<GridRow> {
    grid.points(template)
        .into_par_iter()
        .enumerate()
        .map(|(index, config)| {
            let outcome = run(&config).map_err(|e| e.to_string());
            let io_error = outcome.as_ref().ok().and_then(|report| {
                write_artifacts(report, &template.output_dir.join(format!("point-{index:03}")))
                    .err()
                    .map(|e| e.to_string())
            });
            GridRow {
                index,
                config,
                outcome,
                io_error,
            }
        })
        .collect()
}

pub fn write_summary(rows: &[GridRow], path: &Path) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "index",
        "mu",
        "c",
        "theta",
        "M",
        "status",
        "passed",
        "failed",
        "skipped",
        "exit_code",
        "max_residual",
        "noncompact",
        "failed_checks",
        "error",
    ])?;
    for row in rows {
        let cfg = &row.config;
        let (passed, failed, skipped, max_res, failed_checks) = match &row.outcome {
            Ok(r) => (
                r.summary.passed.to_string(),
                r.summary.failed.to_string(),
                r.summary.skipped.to_string(),
                format!("{:.3e}", r.max_residual()),
                r.failed_checks().join(";"),
            ),
            Err(_) => Default::default(),
        };
        let error = match (&row.outcome, &row.io_error) {
            (Err(e), _) => e.clone(),
            (Ok(_), Some(e)) => e.clone(),
            _ => String::new(),
        };
        w.write_record([
            row.index.to_string(),
            cfg.mu.to_string(),
            cfg.c.to_string(),
            cfg.theta.to_string(),
            cfg.m.to_string(),
            row.status().to_string(),
            passed,
            failed,
            skipped,
            row.exit_code().to_string(),
            max_res,
            row.noncompact(),
            failed_checks,
            error,
        ])?;
    }
    w.flush()
}

/// Worst exit code across the grid.
pub fn grid_exit_code(rows: &[GridRow]) -> i32 {
    rows.iter().map(GridRow::exit_code).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_follow_list_order() {
        let grid: GridFile = toml::from_str("mu = [0.3, 0.5]\ntheta = [0.0, 0.25, 0.5]\n").unwrap();
        let pts = grid.points(&RunConfig::default());
        assert_eq!(pts.len(), 6);
        assert_eq!((pts[0].mu, pts[0].theta), (0.3, 0.0));
        assert_eq!((pts[1].mu, pts[1].theta), (0.3, 0.25));
        assert_eq!((pts[5].mu, pts[5].theta), (0.5, 0.5));
        assert!(pts.iter().all(|p| p.c == 2.0 && p.m == 32));
    }

    #[test]
    fn unknown_grid_keys_are_rejected() {
        assert!(toml::from_str::<GridFile>("nu = [0.1]").is_err());
    }
}
