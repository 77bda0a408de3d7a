use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values from different quantale instances met in one operation.
    #[error("values belong to different quantale instances")]
    InstanceMismatch,

    /// An input document or table is malformed.
    #[error("schema error: {0}")]
    Schema(String),

    /// The operation needs a finite carrier (or otherwise is not available).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Morphisms whose objects do not line up.
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    /// Relations or matrices of incompatible shape.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A brute-force search would exceed its documented size bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// An identity that must hold on validated input did not.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}
