use std::process::ExitCode;

use qbos::GameError;

/// Process exit statuses. Clap reports its own usage errors with status 2,
/// which coincides with [`ExitStatus::Input`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Input = 2,
    Reproduction = 3,
    CrossCheck = 4,
}

impl From<ExitStatus> for ExitCode {
    fn from(status: ExitStatus) -> Self {
        ExitCode::from(status as u8)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid field \"{field}\": {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("reproduction failed: {}", failures.join("; "))]
    Reproduction { failures: Vec<String> },
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl CliError {
    pub fn field(field: impl Into<String>, message: impl ToString) -> Self {
        CliError::Field { field: field.into(), message: message.to_string() }
    }

    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Field { .. } | CliError::Input(_) | CliError::Io { .. } => ExitStatus::Input,
            CliError::Reproduction { .. } => ExitStatus::Reproduction,
            CliError::CrossCheck(_) => ExitStatus::CrossCheck,
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        CliError::Input(e.to_string())
    }
}
