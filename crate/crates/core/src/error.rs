use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFinite(f64),

    /// The argument lies outside the range where an evaluation is certified.
    #[error("argument {x} outside the supported domain |x| <= {limit}")]
    OutOfDomain { x: f64, limit: f64 },

    /// A parameter makes the requested quantity degenerate (e.g. a zero frequency).
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    /// An argument failed validation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A precondition on the integration interval does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Adaptive quadrature exceeded its recursion budget.
    #[error("adaptive quadrature did not converge on [{lo}, {hi}] (depth {depth})")]
    ConvergenceFailure { lo: f64, hi: f64, depth: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(x))
    }
}
