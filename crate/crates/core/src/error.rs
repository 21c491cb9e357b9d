use thiserror::Error;

/// Errors produced by graph ingestion and the analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An exhaustive oracle or enumerator refused an input above its cap.
    #[error("refused: {0}")]
    Refused(String),

    #[error("no non-empty core")]
    NoCore,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Argument(message.into()))
}
