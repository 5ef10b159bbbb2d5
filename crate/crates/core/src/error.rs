use alloc::string::String;

/// Errors raised by the algebraic and numeric layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("q0 = {0} is outside the open interval (0, 1)")]
    QOutOfRange(String),
    #[error("{what} requires a nonnegative argument, got {value}")]
    NegativeArgument { what: &'static str, value: i64 },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("ambiguous projection: {0}")]
    AmbiguousProjection(String),
    #[error("action leaves the component span: {0}")]
    NotClosed(String),
    #[error("arity mismatch: expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("scalar is not invertible in the supported field")]
    NotInvertible,
    #[error("parse error at {start}..{end}: {message}")]
    Parse { message: String, start: usize, end: usize },
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("no presentation found: {0}")]
    NoPresentation(String),
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>, start: usize, end: usize) -> Self {
        Error::Parse { message: message.into(), start, end }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
