use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole: denominator {0} vanishes under the given specialization")]
    Pole(String),
    #[error("singular system: no pivot in column {column}")]
    Singular { column: usize },
    #[error("inconsistent system: row {row} reduces to 0 = {value}")]
    Inconsistent { row: usize, value: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("not symmetric in q and t: {0}")]
    NotSymmetric(String),
    #[error("non-integral result: {0}")]
    NotIntegral(String),
    #[error("unknown table id {0:?}")]
    UnknownTable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
