use thiserror::Error;

/// Errors shared across the workspace crates.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid item {id}: {msg}")]
    InvalidItem { id: String, msg: String },

    #[error("unknown item id {0}")]
    UnknownItem(String),

    #[error("duplicate item id {0}")]
    DuplicateItem(String),

    #[error("{0}")]
    Invalid(String),
}

impl CoreError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        CoreError::Parse {
            line,
            msg: msg.into(),
        }
    }
}
