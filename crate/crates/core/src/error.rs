use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("input vector has zero norm")]
    ZeroVector,

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("{solver} did not converge for eigenvalue index {index} after {iterations} iterations")]
    NonConvergence {
        solver: &'static str,
        index: usize,
        iterations: usize,
    },

    #[error(
        "dense eigendecomposition of dimension {n} exceeds the cap of {cap} \
         (raise it with RITZSYM_DENSE_CAP or an explicit override)"
    )]
    DenseCapExceeded { n: usize, cap: usize },

    #[error("{function} is not defined at {at}")]
    FunctionDomain { function: String, at: String },

    #[error("diagonal is not constant: max deviation {deviation:e} exceeds {tol:e}")]
    NonConstantDiagonal { deviation: f64, tol: f64 },

    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },

    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Broad failure classes, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Numeric,
    Io,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Io { .. } | Error::Parse { .. } => ErrorClass::Io,
            Error::InvalidInput(_) | Error::UnknownStrategy { .. } => ErrorClass::Usage,
            _ => ErrorClass::Numeric,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
