use symfunc_numeric::SymError;
use thiserror::Error;

/// Errors raised by the main-term evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RmtError {
    /// Input violates a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Grid refinement did not settle within the allowed number of doublings.
    #[error("quadrature did not converge: last two estimates differ by {diff:e} at grid {grid}")]
    Quadrature {
        /// Difference between the last two estimates.
        diff: f64,
        /// Final grid size per dimension.
        grid: usize,
    },
    /// Numeric evaluation failed.
    #[error(transparent)]
    Sym(#[from] SymError),
}
