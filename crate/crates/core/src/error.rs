use thiserror::Error;

/// Errors raised by the fitting library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A token in an input file could not be read as a number.
    #[error("parse error at line {line}, token {position}: {token:?} is not a number")]
    Parse {
        token: String,
        line: usize,
        position: usize,
    },

    /// A parsed value was outside the open unit interval.
    #[error("value {value} at line {line}, token {position} is outside (0, 1)")]
    OutOfRange {
        value: f64,
        line: usize,
        position: usize,
    },

    #[error("unknown dataset: {0}")]
    UnknownDataset(String),

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    /// A setting (flag or environment variable) could not be used.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Summary statistics need at least two distinct observations.
    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("not enough observations: {got} given, at least {needed} required")]
    InsufficientData { got: usize, needed: usize },

    /// The finite-difference Hessian could not be evaluated at every stencil point.
    #[error("infeasible stencil point in Hessian evaluation")]
    InfeasibleStencil,

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
