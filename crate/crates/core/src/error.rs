use alloc::string::String;

/// Errors raised by evaluation, construction and the numerical oracle.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A three-term recurrence hit an exactly vanishing denominator.
    #[error("degenerate Jacobi parameters: recurrence denominator vanishes at step {step} (alpha = {alpha}, beta = {beta})")]
    DegenerateParameters { step: usize, alpha: f64, beta: f64 },

    /// An argument or parameter was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    /// The complex-index route left a non-negligible imaginary part.
    #[error("complex leak: imaginary part {imag:e} against real part {real:e}")]
    ComplexLeak { imag: f64, real: f64 },

    /// Two independent evaluation routes disagree.
    #[error("evaluation routes disagree: {first} vs {second}")]
    RouteMismatch { first: f64, second: f64 },

    /// A point lies outside the open domain of the function.
    #[error("argument {x} outside the domain ({lo}, {hi})")]
    Domain { x: f64, lo: f64, hi: f64 },

    /// A system specification violates its structural invariants.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    /// A quantum number outside the bound-state range.
    #[error("radial quantum number {n_r} is not admissible: {reason}")]
    Inadmissible { n_r: i64, reason: String },

    /// A rational extension violates one of its admissibility inequalities.
    #[error("inadmissible extension: {0}")]
    ExtensionInadmissible(String),

    /// The point canonical transformation degenerates to the identity.
    #[error("flat space: the point canonical transformation is degenerate for lambda = 0")]
    FlatSpace,

    /// The requested combination is outside what the construction supports.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// An internal identity failed; signals a bug or an inconsistent input.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    /// A grid function does not live on the grid of the operator it meets.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// An iterative method failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Requested data beyond what was computed.
    #[error("index {index} beyond available depth {depth}")]
    DepthExceeded { index: usize, depth: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn finite(x: f64, what: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(what))
    }
}
