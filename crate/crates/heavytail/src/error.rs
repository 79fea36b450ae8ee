//! Error type shared across the library and the CLI.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("sample sums to zero; ratio statistics are undefined")]
    AllZeroSample,

    #[error("degenerate sample (all values equal): {what} is undefined")]
    DegenerateSample { what: &'static str },

    #[error("no limit cell for statistic {stat} in regime {regime}: {reason}")]
    UndefinedCell { stat: String, regime: String, reason: String },

    #[error("model does not classify into a supported regime: {0}")]
    UnsupportedRegime(String),

    #[error("root bracket could not be expanded to contain a sign change ({0})")]
    BracketFailed(String),

    #[error("covariance matrix is not positive semidefinite (det = {det})")]
    NotPsd { det: f64 },

    #[error("model spec `{spec}` is malformed: {reason}")]
    ModelSpec { spec: String, reason: String },

    #[error("bad experiment config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable category, used by the CLI for exit codes and
    /// error lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "invalid-parameter",
            Error::AllZeroSample => "all-zero-sample",
            Error::DegenerateSample { .. } => "degenerate-sample",
            Error::UndefinedCell { .. } => "undefined-cell",
            Error::UnsupportedRegime(_) => "unsupported-regime",
            Error::BracketFailed(_) => "bracket-failed",
            Error::NotPsd { .. } => "not-psd",
            Error::ModelSpec { .. } => "model-spec",
            Error::Config(_) => "config",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
