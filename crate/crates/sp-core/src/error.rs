use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("symbol must be a non-empty whitespace-free token, got {0:?}")]
    InvalidSymbol(String),
    #[error("pattern must contain at least one symbol")]
    EmptyPattern,
    #[error("pattern frequency must be at least 1")]
    ZeroFrequency,
    #[error("duplicate pattern id {0:?}")]
    DuplicateId(String),
    #[error("unknown pattern id {0:?}")]
    UnknownId(String),
    #[error("sequence is not a whole number of unit repetitions (residue starts at symbol {position})")]
    NotARepetition { position: usize },
    #[error("malformed run-length code: {0}")]
    MalformedCode(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
