use thiserror::Error;

/// Errors produced by construction and query operations.
///
/// Verification sweeps never raise these for mathematical violations;
/// violations are data (report rows). Errors are reserved for invalid
/// inputs, exceeded bounds and malformed queries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type {series}{rank}: {reason}")]
    InvalidCartanType {
        series: char,
        rank: usize,
        reason: String,
    },

    #[error("rank bound exceeded: {what} requires {bound}, got {got}")]
    BoundExceeded {
        what: &'static str,
        bound: String,
        got: usize,
    },

    #[error("group too large for explicit enumeration: |W| = {order} > {bound}")]
    GroupTooLarge { order: u64, bound: u64 },

    #[error("label/type mismatch: {0}")]
    Mismatch(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("parse error at byte {offset}: {message}\n  {input}\n  {caret}")]
    Parse {
        input: String,
        offset: usize,
        message: String,
        caret: String,
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    pub fn parse(input: &str, offset: usize, message: impl Into<String>) -> Self {
        let caret = format!("{}^", " ".repeat(offset.min(input.len())));
        Error::Parse {
            input: input.to_string(),
            offset,
            message: message.into(),
            caret,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
