use thiserror::Error;

/// Errors produced while reading, validating or reducing contexts.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text; positions are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A context violates a structural invariant (empty label list,
    /// duplicate labels, ragged incidence, overlapping attribute sides).
    #[error("invalid context: {0}")]
    InvalidContext(String),

    /// An argument violates the operation's contract (empty attribute
    /// selection, label outside the context, mixed rule types, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The discernibility function contains an empty clause, so no
    /// attribute subset can satisfy it.
    #[error("unsatisfiable: an empty clause admits no hitting set")]
    Unsatisfiable,

    /// Exact reduction enumeration is guarded against exponential blow-up.
    #[error("attribute universe too large for exact reduction: {count} attributes (limit {limit})")]
    AttributeLimit { count: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
