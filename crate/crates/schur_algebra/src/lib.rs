//! Exact linear combinations of Schur functions and power sums, with the
//! Murnaghan-Nakayama multiplication and derivation operators and their
//! negative-degree counterparts evaluated at finite alphabets.

mod expansion;
mod mn;
mod negative;
pub mod suites;

pub use expansion::{Expansion, PowerSum, PowerSumExpansion, Schur, SchurExpansion, Term};
pub use mn::{
    hall_inner, mn_derive, mn_multiply, powersum_inner, powersum_reduce, powersum_to_schur, schur_to_powersum,
};
pub use negative::{ls_mn_sides, mn_negative, mn_negative_composite, AlgebraError};
