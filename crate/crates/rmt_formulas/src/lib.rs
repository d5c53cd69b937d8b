//! Closed-form main terms for averages over the unitary group `U(N)` of
//! products, ratios and logarithmic derivatives of characteristic
//! polynomials `χ_g(z) = det(I - z g^{-1})`.

mod error;
mod explicit;
mod logders;
mod moments;
mod ratios;
mod recipe;
pub mod suites;

pub use error::RmtError;
pub use explicit::{explicit_formula_rhs, ExplicitOptions, ExplicitValue, SymTestFunction, TestFunction};
pub use logders::{completed_logders_main, logders_main, Truncation, TruncatedValue, DEFAULT_MAX_PART};
pub use moments::{moment_leading, moment_unitary, product_avg, ProductForm};
pub use ratios::ratio_avg;
pub use recipe::{matching_weight, recipe_main, specialized_power_sum, RecipeInput};

use partition_core::Partition;

/// Partitions with exactly `len` parts, each between 1 and `max_part`, in
/// reverse lexicographic order.
pub fn partitions_exact_len(len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == len {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for p in (1..=cap).rev() {
            cur.push(p);
            rec(len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `size` with exactly `len` parts.
pub fn partitions_of_len(size: usize, len: usize) -> Vec<Partition> {
    partition_core::partitions_bounded(size, len, size).into_iter().filter(|p| p.len() == len).collect()
}
