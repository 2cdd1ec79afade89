use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by mesh handling, quadrature construction, and the
/// interpolation operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Geometric input is unusable: degenerate triangle, non-finite
    /// coordinates, out-of-range vertex references, duplicate cells.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A numeric argument lies outside the mathematical domain of the
    /// operation (e.g. `ln_gamma` at a non-positive argument, a family
    /// exponent `<= -1`, an evaluation point outside the triangle).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural argument is invalid: local index out of `1..=3`, node
    /// count outside the supported range, empty input list.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A family parameter for which the element degenerates and no basis
    /// exists.
    #[error("singular family parameter: {0}")]
    SingularParameter(String),

    /// A quadrature rule was paired with a functional whose weight it does
    /// not carry.
    #[error("rule mismatch: {0}")]
    RuleMismatch(String),

    /// A mesh file could not be parsed; `line` is the 1-based line number in
    /// the offending file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An iterative numeric procedure failed to converge.
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
