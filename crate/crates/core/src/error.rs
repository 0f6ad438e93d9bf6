use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("symbol `{0}` has no binding")]
    UnboundSymbol(String),

    #[error("scalar parse error at column {column}: {message}")]
    ScalarParse { column: usize, message: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("convention table inconsistency: {0}")]
    ConventionViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("representation has no image for generator `{0}`")]
    MissingImage(String),

    #[error("generator `{0}` is not central")]
    NotCentral(String),

    #[error("presentation shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("representation self-check failed: {0}")]
    SelfCheckFailed(String),

    #[error("target polynomial is not homogeneous of degree {0}")]
    InhomogeneousTarget(u32),

    #[error("invalid presentation ({invariant}): {detail}")]
    Validation { invariant: String, detail: String },
}

impl Error {
    pub fn validation(invariant: &str, detail: impl Into<String>) -> Self {
        Error::Validation {
            invariant: invariant.to_string(),
            detail: detail.into(),
        }
    }
}
