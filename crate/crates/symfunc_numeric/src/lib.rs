//! Numeric evaluation of symmetric functions at finite complex alphabets.
//!
//! Schur functions are available through the bialternant quotient and
//! through semistandard tableaux. Littlewood-Schur functions `LS_λ(X; Y)`
//! are available through Littlewood-Richardson expansion and through a
//! block determinant for `LS_λ(-X; Y)`.

mod basis;
mod error;
mod lr;
mod ls;
mod report;
pub mod sampling;
mod schur;
pub mod suites;
mod varset;

pub use basis::{basis_eval, elementary, complete, power_sum, BasisKind};
pub use error::SymError;
pub use lr::{lr_coeff, lr_contents};
pub use ls::{ls_comb, ls_det, ls_eval, ls_skew};
pub use report::VerificationReport;
pub use schur::{schur, schur_comb, schur_comb_capped, schur_det, skew_schur_comb, DEFAULT_BOX_CAP, DELTA_MIN};
pub use varset::{delta, delta2, e_prod, ComplexJson, VarSet};

pub use num_complex::Complex64;

/// Relative error `|a - b| / max(1, |a|, |b|)`.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}
