use thiserror::Error;

/// CLI failure classes, each with its own exit code (documented in --help).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Precondition(String),
    #[error("invalid document: {0}")]
    Document(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 5,
            CliError::Io(_) => 4,
            CliError::Format(_) => 3,
            CliError::Precondition(_) | CliError::Document(_) => 2,
        }
    }
}

/// Maps core-library errors raised while operating on otherwise well-formed
/// input (disconnected graphs, radius too large, oversized oracle
/// instances, bad probabilities) to the precondition exit class.
impl From<antimagic::Error> for CliError {
    fn from(e: antimagic::Error) -> Self {
        CliError::Precondition(e.to_string())
    }
}
