use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// `min_var` of the constant monomial.
    #[error("minimal variable of the constant monomial is undefined")]
    UndefinedMin,

    #[error("not admissible: {0}")]
    Admissibility(String),

    #[error("resource limit exceeded: {what} (partial count {partial})")]
    Resource { what: String, partial: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Monte-Carlo genericity certificate could not be established.
    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("Hilbert function did not stabilize: {0}")]
    NotStabilized(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
