use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bwma_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for invalid input, 1 for failures during computation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(bwma_core::Error::InvalidParameter(_)) => 2,
            CliError::Core(_) => 1,
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}
