use thiserror::Error;

use crate::Partition;

/// Errors raised by partition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    /// Input parts are not weakly decreasing.
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    /// Partition does not fit the requested rectangle.
    #[error("{partition} is not contained in rectangle with {height} rows of length {width}")]
    NotInRectangle {
        /// Offending partition.
        partition: Partition,
        /// Row length.
        width: usize,
        /// Number of rows.
        height: usize,
    },
    /// Inner shape is not contained in the outer shape.
    #[error("{inner} is not contained in {outer}")]
    NotContained {
        /// Inner shape.
        inner: Partition,
        /// Outer shape.
        outer: Partition,
    },
    /// Partition has more parts than allowed.
    #[error("{partition} has more than {max} parts")]
    TooLong {
        /// Offending partition.
        partition: Partition,
        /// Allowed length.
        max: usize,
    },
}
