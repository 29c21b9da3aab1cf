use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("polynomial is not quasi-homogeneous: {0}")]
    NotQuasiHomogeneous(String),

    #[error("Milnor-Orlik product {0} is not a non-negative integer")]
    NonIntegralMilnor(String),

    #[error("singularity is not isolated: graded piece of degree {degree} has dimension {dim}")]
    NonIsolated { degree: i64, dim: usize },

    #[error("untabulated singularity: {0}")]
    Untabulated(String),

    #[error("missing input: {0}")]
    MissingInput(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid Betti data: {0}")]
    InvalidBetti(String),

    #[error("negative Betti number: {0}")]
    NegativeBetti(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_col(text, offset);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Parse errors are input-format problems; everything else is a
    /// semantic violation of some model invariant.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

/// One-based line and column of a byte offset.
pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
        + 1;
    (line, column)
}
