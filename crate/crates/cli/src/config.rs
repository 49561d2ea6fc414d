//! Run configuration: parameters, suite selection and output location.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qiso_core::podles::TruncationConfig;
use serde::{Deserialize, Serialize};

/// Errors that make a configuration unusable; reported with exit code 3.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("no suites selected")]
    EmptySuites,
    #[error("unknown suite `{0}` (expected one of: words, podles, commutant, action, noncompact, quotient, volume)")]
    UnknownSuite(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: PathBuf,
        source: toml::de::Error,
    },
}

/// Verification suites in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Words,
    Podles,
    Commutant,
    Action,
    Noncompact,
    Quotient,
    Volume,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Words,
        Suite::Podles,
        Suite::Commutant,
        Suite::Action,
        Suite::Noncompact,
        Suite::Quotient,
        Suite::Volume,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Podles => "podles",
            Suite::Commutant => "commutant",
            Suite::Action => "action",
            Suite::Noncompact => "noncompact",
            Suite::Quotient => "quotient",
            Suite::Volume => "volume",
        }
    }

    /// Suites whose failure makes this one meaningless.
    pub fn dependencies(self) -> &'static [Suite] {
        match self {
            Suite::Words | Suite::Podles => &[],
            Suite::Commutant => &[Suite::Podles],
            Suite::Action => &[Suite::Words, Suite::Podles],
            Suite::Noncompact | Suite::Quotient | Suite::Volume => &[Suite::Action],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mu: f64,
    pub c: f64,
    pub theta: f64,
    #[serde(rename = "M")]
    pub m: usize,
    pub buffer: usize,
    #[serde(rename = "N_quotient")]
    pub n_quotient: usize,
    pub suites: BTreeSet<Suite>,
    pub output_dir: PathBuf,
    pub seed: u64,
    /// Replace `q_3^-` by `r_3` (dropping `y`) as a negative control.
    #[serde(default)]
    pub violate: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mu: 0.5,
            c: 2.0,
            theta: 0.25,
            m: 32,
            buffer: 2,
            n_quotient: 2,
            suites: Suite::ALL.into_iter().collect(),
            output_dir: PathBuf::from("qiso-out"),
            seed: 0,
            violate: false,
        }
    }
}

/// A partially specified configuration, as read from a TOML file; missing
/// fields fall back to [`RunConfig::default`].
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub mu: Option<f64>,
    pub c: Option<f64>,
    pub theta: Option<f64>,
    #[serde(rename = "M")]
    pub m: Option<usize>,
    pub buffer: Option<usize>,
    #[serde(rename = "N_quotient")]
    pub n_quotient: Option<usize>,
    pub suites: Option<Vec<String>>,
    pub output_dir: Option<PathBuf>,
    pub seed: Option<u64>,
    pub violate: Option<bool>,
}

impl RunConfigFile {
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

    /// Fields present in `self` override `base`.
    pub fn apply(self, mut base: RunConfig) -> Result<RunConfig, ConfigError> {
        macro_rules! take {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field {
                    base.$field = v;
                }
            )*};
        }
        take!(mu, c, theta, m, buffer, n_quotient, output_dir, seed, violate);
        if let Some(names) = self.suites {
            base.suites = parse_suites(&names)?;
        }
        Ok(base)
    }
}

pub fn parse_suites<S: AsRef<str>>(names: &[S]) -> Result<BTreeSet<Suite>, ConfigError> {
    names.iter().map(|s| s.as_ref().parse()).collect()
}

impl RunConfig {
    pub fn truncation(&self) -> Result<TruncationConfig, ConfigError> {
        TruncationConfig::new(self.m, self.mu, self.c)
            .and_then(|t| t.with_buffer(self.buffer))
            .map_err(|e| ConfigError::Invalid(e.to_string()))
    }

    /// Rejects everything the truncation rejects, plus an empty suite set,
    /// a non-finite angle and a zero quotient cutoff.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.suites.is_empty() {
            return Err(ConfigError::EmptySuites);
        }
        self.truncation()?;
        if !self.theta.is_finite() {
            return Err(ConfigError::Invalid(format!("theta must be finite, got {}", self.theta)));
        }
        if self.n_quotient == 0 {
            return Err(ConfigError::Invalid("N_quotient must be at least 1".into()));
        }
        if self.violate && self.m <= 3 {
            return Err(ConfigError::Invalid("the negative control needs M > 3".into()));
        }
        Ok(())
    }
}
