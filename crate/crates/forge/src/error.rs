use operad_forge_core::Error as CoreError;

/// Errors surfaced by the command line, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    /// Parse 2, carrier 3, arity bound 4, anything else 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(CoreError::Carrier { .. }) => 3,
            CliError::Core(CoreError::ArityBound { .. }) => 4,
            CliError::Core(CoreError::MissingLabel(_) | CoreError::LeafMismatch) => 2,
            CliError::Core(_) | CliError::Usage(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
