use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("permittivity of {model} diverges at xi = {xi} rad/s; use eps_times_xi_squared")]
    DivergentPermittivity { model: &'static str, xi: f64 },

    #[error("unknown material '{0}'")]
    UnknownMaterial(String),

    #[error("unknown figure preset '{0}'")]
    UnknownPreset(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no convergence: estimate {estimate:e}, error bound {error_bound:e} ({context})")]
    Convergence {
        estimate: f64,
        error_bound: f64,
        context: &'static str,
    },

    #[error("relative error undefined: exact pressure is zero")]
    UndefinedMetric,

    #[error("plot script for '{expected}' cannot be built from '{found}' results")]
    PresetMismatch { expected: String, found: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
