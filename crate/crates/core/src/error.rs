use thiserror::Error;

pub type Result<T, E = SkeinError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("invalid slice: {0}")]
    InvalidSlice(String),

    #[error("bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("unsupported arity {n} for {what}")]
    UnsupportedN { what: &'static str, n: usize },

    #[error("linear system is singular: {0}")]
    SingularSystem(String),

    #[error("normalization failed: {0}")]
    Normalization(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl SkeinError {
    /// Short stable code for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            SkeinError::DivisionByZero => "E_DIV_ZERO",
            SkeinError::Parse { .. } => "E_PARSE",
            SkeinError::ArityMismatch { .. } => "E_ARITY",
            SkeinError::InvalidSlice(_) => "E_SLICE",
            SkeinError::BoundExceeded { .. } => "E_BOUND",
            SkeinError::UnsupportedN { .. } => "E_UNSUPPORTED_N",
            SkeinError::SingularSystem(_) => "E_SINGULAR",
            SkeinError::Normalization(_) => "E_NORMALIZE",
            SkeinError::InvalidCut(_) => "E_CUT",
            SkeinError::CheckFailed(_) => "E_CHECK",
            SkeinError::InvalidArgument(_) => "E_ARG",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, SkeinError::Parse { .. })
    }
}
