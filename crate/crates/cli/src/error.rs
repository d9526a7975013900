use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid input: {0}")]
    Engine(#[from] schubert_ic::Error),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Engine(_) => 2,
            CliError::Verify(_) => 3,
            CliError::Io { .. } | CliError::Csv(_) => 4,
        }
    }
}
