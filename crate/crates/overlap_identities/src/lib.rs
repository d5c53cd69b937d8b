//! Laplace-type expansions of Schur and Littlewood-Schur functions along
//! splittings of their alphabets, indexed by overlaps of partition pairs.

mod identities;
pub mod suites;

pub use identities::{
    complement_schur_check, dual_cauchy_via_overlap, first_overlap_lhs, first_overlap_rhs, first_overlap_unsigned_sum,
    identity_sort_split, ls_neg, overlap_fiber_by_subsets, schur_first_overlap_rhs, schur_second_overlap_fiber,
    schur_second_overlap_subpartitions, second_overlap_rhs, OverlapError,
};
pub use symfunc_numeric::VerificationReport;
