use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scenario parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid scenario: {0}")]
    Scenario(String),
    #[error("malformed PGM: {0}")]
    Pgm(String),
    #[error("evaluation input mismatch: {0}")]
    EvalMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
