use std::path::PathBuf;

use edgebetti::ComputeError;
use thiserror::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Usage = 1,
    Failure = 2,
    Undecided = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Compute(#[from] ComputeError),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => Exit::Usage,
            CliError::Compute(e) => match e {
                ComputeError::CapExceeded { .. } => Exit::Undecided,
                ComputeError::InvalidParameters(_)
                | ComputeError::Unsupported(_)
                | ComputeError::NotPrime(_)
                | ComputeError::Graph(_)
                | ComputeError::Poly(_) => Exit::Usage,
                _ => Exit::Failure,
            },
        }
    }
}

impl From<edgebetti::GraphError> for CliError {
    fn from(e: edgebetti::GraphError) -> Self {
        CliError::Compute(e.into())
    }
}
