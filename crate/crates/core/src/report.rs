//! Machine-readable records for individual verification checks.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One check: a stable identifier, the identity it verifies, its outcome and
/// the measured residual.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// The identity or property under test, e.g. `"AB = mu^-2 BA"`.
    #[serde(rename = "paper_ref")]
    pub identity: String,
    pub status: Status,
    pub residual: f64,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

impl CheckRecord {
    /// Passes iff `residual <= tol` (a NaN residual fails).
    pub fn from_residual(check_id: impl Into<String>, identity: impl Into<String>, residual: f64, tol: f64) -> Self {
        let status = if residual <= tol { Status::Pass } else { Status::Fail };
        CheckRecord {
            check_id: check_id.into(),
            identity: identity.into(),
            status,
            residual,
            details: serde_json::Value::Null,
        }
    }

    /// A boolean outcome; `residual` is recorded as-is.
    pub fn from_outcome(check_id: impl Into<String>, identity: impl Into<String>, passed: bool, residual: f64) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            identity: identity.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            residual,
            details: serde_json::Value::Null,
        }
    }

    pub fn skipped(check_id: impl Into<String>, identity: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            identity: identity.into(),
            status: Status::Skip,
            residual: 0.0,
            details: serde_json::json!({ "reason": reason.into() }),
        }
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = details;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        assert_eq!(CheckRecord::from_residual("a", "x", 1e-13, 1e-12).status, Status::Pass);
        assert_eq!(CheckRecord::from_residual("a", "x", 1e-11, 1e-12).status, Status::Fail);
        assert_eq!(CheckRecord::from_residual("a", "x", f64::NAN, 1e-12).status, Status::Fail);
    }

    #[test]
    fn wire_format() {
        let r = CheckRecord::from_residual("podles.a_selfadjoint", "A* = A", 0.0, 1e-12);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"check_id":"podles.a_selfadjoint","paper_ref":"A* = A","status":"pass","residual":0.0}"#
        );
        let skip = serde_json::to_value(CheckRecord::skipped("x", "y", "dependency failed")).unwrap();
        assert_eq!(skip["status"], "skip");
        assert_eq!(skip["details"]["reason"], "dependency failed");
    }
}
