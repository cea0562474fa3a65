use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A computation that should succeed did not: exit code 1.
    #[error(transparent)]
    Core(#[from] qeuler_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}
