use thiserror::Error;

/// Errors raised by parsing and by the arithmetic and order-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text. `pos` is a 0-based character offset.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("degree is undefined for 0")]
    DegreeOfZero,

    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported exponentiation: {0}")]
    UnsupportedExponentiation(String),

    #[error("zero factor: {0}")]
    ZeroFactor(String),

    #[error("{what} exceeds the configured cap of {limit}")]
    CapExceeded { what: String, limit: u64 },

    #[error("bounds mismatch: {0}")]
    BoundsMismatch(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors caused by malformed text rather than by a domain condition.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
