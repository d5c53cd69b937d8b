use partition_core::PartitionError;
use thiserror::Error;

/// Errors raised by numeric symmetric function evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymError {
    /// Two variables are closer than the allowed separation.
    #[error("ill-conditioned; use schur_comb (minimum separation {min_sep:e} below {required:e})")]
    IllConditioned {
        /// Smallest pairwise distance found.
        min_sep: f64,
        /// Required separation.
        required: f64,
    },
    /// The diagram is too large for tableau enumeration.
    #[error("partition of size {size} exceeds the box cap {cap}")]
    TooLarge {
        /// Size of the partition.
        size: usize,
        /// Allowed size.
        cap: usize,
    },
    /// A variable is zero where its inverse is needed.
    #[error("zero variable in negative power sum")]
    ZeroVariable,
    /// Invalid partition input.
    #[error(transparent)]
    Partition(#[from] PartitionError),
    /// Input violates a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
}
