use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] roughdm::error::Error),
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    /// 2 for input problems, 3 for exceeded caps, 4 for internal defects.
    pub fn exit_code(&self) -> i32 {
        use roughdm::error::Error as E;
        match self {
            CliError::Core(E::Capacity { .. }) => 3,
            CliError::Core(E::Defect(_)) | CliError::Json(_) => 4,
            _ => 2,
        }
    }
}
