use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violates a mathematical precondition.
    #[error("{0}")]
    Domain(String),
    /// A configurable size limit was exceeded.
    #[error("{what} exceeds the limit of {limit}")]
    Resource { what: &'static str, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource { .. } => 3,
            _ => 1,
        }
    }
}
