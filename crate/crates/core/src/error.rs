use thiserror::Error;

/// Errors raised by the library. Variants map onto the CLI exit codes
/// (parse errors, precondition violations, validation failures).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("zero substituted into a negative power of variable {0}")]
    ZeroToNegativePower(usize),

    #[error("unsupported dimension {dim} (exact polytope geometry is available up to {max})")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),

    #[error("system is not zero-dimensional: {0}")]
    PositiveDimensional(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("subdivision depth cap {cap} exceeded at box {region}")]
    DepthExceeded { cap: usize, region: String },

    #[error("root oracle failure: {0}")]
    Oracle(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
