//! Integer partitions and the combinatorics built on them: conjugation,
//! rectangle complements, `(m, n)`-indices, ribbons, staircase walks,
//! overlaps of partition pairs and subpartitions.
//!
//! Partitions are stored without trailing zeros. A box `(i, j)` lies in `λ`
//! when `1 <= i <= λ_j`, so the first coordinate is the column and the second
//! is the row.

mod error;
mod partition;
mod ribbon;
mod subpartition;
mod walk;

pub use error::PartitionError;
pub use partition::{
    partitions_bounded, partitions_in_box, partitions_of, partitions_up_to, ParsePartitionError, Partition,
};
pub use ribbon::{ribbon_height, ribbons_added, ribbons_removed, RibbonStep};
pub use subpartition::{c_seq, increasing_subsets, sub_partition};
pub use walk::{overlap, overlap_fiber, FiberEntry, OverlapOutcome, Step, StaircaseWalk};

/// Sign `(-1)^k` as an `i32`.
pub fn parity_sign(k: usize) -> i32 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `(m, n)`-index of `λ`.
///
/// Largest `k <= min(m, n)` with `(m + 1 - k, n + 1 - k) ∉ λ`. May be negative.
pub fn mn_index(lambda: &Partition, m: usize, n: usize) -> i64 {
    let mut k = m.min(n) as i64;
    loop {
        let col = m as i64 + 1 - k;
        let row = n as i64 + 1 - k;
        if !lambda.contains_box(col, row) {
            return k;
        }
        k -= 1;
    }
}

/// Complement of `λ` inside the rectangle with `n` rows of length `m`.
///
/// `λ̃ = (m - λ_n, ..., m - λ_1)`.
pub fn complement(lambda: &Partition, m: usize, n: usize) -> Result<Partition, PartitionError> {
    if !lambda.fits_in(m, n) {
        return Err(PartitionError::NotInRectangle {
            partition: lambda.clone(),
            width: m,
            height: n,
        });
    }
    let parts = (1..=n).rev().map(|i| m - lambda.part(i)).collect();
    Ok(Partition::from_parts_unchecked(parts))
}
