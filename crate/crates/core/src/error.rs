use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::Parse`] covers malformed input text; every other variant is a
/// model or verification failure on well-formed input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("paths do not compose: {0} ends at `{1}`, {2} starts at `{3}`")]
    NotComposable(String, String, String, String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field error: {0}")]
    Field(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("not a poset; presentation is not homotopy coherent ({0})")]
    NotCoherent(String),

    #[error("no right compatible family available")]
    MissingFamily,

    #[error("algebra too large for the bar-complex oracle: dim A = {dim} exceeds {max}")]
    SizeGate { dim: usize, max: usize },

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
