use thiserror::Error;

/// Errors raised by sampling, functionals and averages.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HaarError {
    /// Input violates a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Evaluation point within the rejection radius of a pole.
    #[error("point {z} lies within {radius:e} of a pole")]
    Pole {
        /// Offending point, formatted.
        z: String,
        /// Rejection radius.
        radius: f64,
    },
    /// Evaluation point on the branch cut of the completed polynomial.
    #[error("branch cut: {0}")]
    Branch(String),
    /// Grid refinement did not settle.
    #[error("quadrature did not converge: successive estimates differ by {0:e}")]
    Quadrature(f64),
    /// Output could not be written.
    #[error("output error: {0}")]
    Output(String),
}
