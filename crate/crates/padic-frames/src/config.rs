//! Runtime configuration with flag > environment > default precedence.
//!
//! The environment hook is a single variable naming a JSON file; command
//! line flags override individual fields on top of whatever that file set.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::oracle::DEFAULT_MATRIX_CAP;

/// Environment variable holding the path of an optional JSON config file.
pub const ENV_CONFIG_PATH: &str = "PADIC_FRAMES_CONFIG";

/// Default relative tolerance for zero-class detection in frame reports.
pub const DEFAULT_TOL_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Relative tolerance for zero-class detection and bound comparisons.
    pub tol_rel: f64,
    /// Resolution cap override; `None` selects the per-prime default.
    pub max_level: Option<u32>,
    /// Largest explicitly stored Gram matrix dimension.
    pub matrix_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tol_rel: DEFAULT_TOL_REL,
            max_level: None,
            matrix_cap: DEFAULT_MATRIX_CAP,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    tol_rel: Option<f64>,
    max_level: Option<u32>,
    matrix_cap: Option<usize>,
}

impl Config {
    /// The defaults, overlaid with the JSON file named by the environment
    /// variable when that variable is set.
    pub fn from_environment() -> Result<Self> {
        match std::env::var(ENV_CONFIG_PATH) {
            Ok(path) if !path.is_empty() => Self::from_file(&path),
            _ => Ok(Self::default()),
        }
    }

    pub fn from_file(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: FileConfig = serde_json::from_str(&text)?;
        Self::default().apply(file.tol_rel, file.max_level, file.matrix_cap)
    }

    /// Overlay explicit flag values; `None` keeps the current setting.
    pub fn with_overrides(
        self,
        tol_rel: Option<f64>,
        max_level: Option<u32>,
        matrix_cap: Option<usize>,
    ) -> Result<Self> {
        self.apply(tol_rel, max_level, matrix_cap)
    }

    fn apply(
        mut self,
        tol_rel: Option<f64>,
        max_level: Option<u32>,
        matrix_cap: Option<usize>,
    ) -> Result<Self> {
        if let Some(tol) = tol_rel {
            if !(0.0..1.0).contains(&tol) {
                return Err(Error::InvalidParameter(format!(
                    "tol_rel must lie in [0, 1), got {tol}"
                )));
            }
            self.tol_rel = tol;
        }
        if let Some(level) = max_level {
            if level == 0 {
                return Err(Error::InvalidParameter(
                    "max_level must be at least 1".into(),
                ));
            }
            self.max_level = Some(level);
        }
        if let Some(cap) = matrix_cap {
            if cap == 0 {
                return Err(Error::InvalidParameter(
                    "matrix_cap must be at least 1".into(),
                ));
            }
            self.matrix_cap = cap;
        }
        Ok(self)
    }

    /// A group context for the prime under this configuration.
    pub fn context(&self, p: u64) -> Result<GroupContext> {
        match self.max_level {
            Some(level) => GroupContext::new(p, level),
            None => GroupContext::with_default_level(p),
        }
    }
}
