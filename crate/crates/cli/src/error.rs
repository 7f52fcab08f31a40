use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::format::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("resource limit reached: {0}")]
    ResourceCap(String),
}

impl CliError {
    /// 1 for user and input errors, 2 for verification mismatches, 3 for resource caps.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::User(_)
            | CliError::Parse { .. }
            | CliError::Io { .. }
            | CliError::Output(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::ResourceCap(_) => 3,
        }
    }

    pub fn user(msg: impl Into<String>) -> Self {
        CliError::User(msg.into())
    }
}
