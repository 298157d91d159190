use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("model error: {0}")]
    Model(String),

    #[error("capacity exceeded: dimension {dim} is above the limit of {limit}")]
    Capacity { dim: usize, limit: usize },

    #[error("eigenvalue-1 eigenspace is {multiplicity}-dimensional; the channel is not relaxing")]
    Degenerate { multiplicity: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(
        "no convergence after {iterations} iterations (last residual {residual:.3e}); \
         check the spectral gap with `is_relaxing`"
    )]
    NotConverged { iterations: usize, residual: f64 },

    #[error("entropy ratio undefined: reference entropy {entropy:.3e} is below the floor")]
    UndefinedRatio { entropy: f64 },

    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
