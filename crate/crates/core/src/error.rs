use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not a square in the working field")]
    IrrationalRadicand(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("integrability error at {line}:{col}: (0,2) monomial `{monomial}` is not allowed")]
    Integrability {
        line: usize,
        col: usize,
        monomial: String,
    },
    #[error("structure constant index order violated: ({i},{j}) needs i < j")]
    IndexOrder { i: usize, j: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("basis change matrix is singular")]
    SingularChange,
    #[error("covectors are linearly dependent")]
    DependentCovectors,
    #[error("value is not real: {0}")]
    NonReal(String),
    #[error("endomorphism does not square to -Id")]
    NotAlmostComplex,
    #[error("algebra is not nilpotent")]
    NonNilpotent,
    #[error("no matching row: {0}")]
    NoMatchingRow(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
