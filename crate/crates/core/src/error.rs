use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("problem {problem} produced a non-finite {what} at {x:?}")]
    NonFinite {
        problem: String,
        what: &'static str,
        x: Vec<f64>,
    },

    #[error("population of {size} is too small for DE mutation (need at least 4)")]
    PopulationTooSmall { size: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),

    #[error("invalid helper mode `{0}`")]
    InvalidHelperMode(String),

    #[error("problem sets differ: {0}")]
    MismatchedProblems(String),

    #[error("malformed results file {path}: {reason}")]
    MalformedResults { path: PathBuf, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
