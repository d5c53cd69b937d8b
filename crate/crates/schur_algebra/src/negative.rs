use partition_core::{parity_sign, ribbons_added, ribbons_removed, Partition};
use symfunc_numeric::{basis_eval, ls_eval, power_sum, rel_err, schur, BasisKind, Complex64, SymError, VarSet};
use thiserror::Error;

use crate::{mn_derive, SchurExpansion};

/// Relative tolerance for numeric rule checks.
pub const RULE_TOL: f64 = 1e-9;

/// Errors from numeric rule checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// Input violates a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The two sides disagree.
    #[error("sides disagree: {lhs} vs {rhs}")]
    Mismatch {
        /// Left side.
        lhs: Complex64,
        /// Right side.
        rhs: Complex64,
    },
    /// Numeric evaluation failed.
    #[error(transparent)]
    Sym(#[from] SymError),
}

fn agree(lhs: Complex64, rhs: Complex64) -> Result<Complex64, AlgebraError> {
    if rel_err(lhs, rhs) <= RULE_TOL {
        Ok(lhs)
    } else {
        Err(AlgebraError::Mismatch { lhs, rhs })
    }
}

/// `s_μ(X) p_{-k}(X) = Σ (-1)^{ht(μ∖λ)} s_λ(X)` over `k`-ribbons `μ ∖ λ`,
/// for `l(μ) = |X|` and `1 <= k <= μ_n`. Returns the common value.
pub fn mn_negative(mu: &Partition, k: usize, x: &VarSet) -> Result<Complex64, AlgebraError> {
    let n = x.len();
    if mu.len() != n || k == 0 || k > mu.part(n.max(1)) {
        return Err(AlgebraError::Precondition(format!(
            "need l(μ) = |X| and 1 <= k <= μ_n, got μ = {mu}, |X| = {n}, k = {k}"
        )));
    }
    let inv = x.inv().ok_or(SymError::ZeroVariable)?;
    let lhs = schur(mu, x)? * power_sum(k, &inv);
    let mut rhs = Complex64::new(0.0, 0.0);
    for step in ribbons_removed(mu, k) {
        rhs += schur(&step.from, x)? * parity_sign(step.height) as f64;
    }
    agree(lhs, rhs)
}

/// `[∏ i^{m_i(λ)} ∂/∂p_λ s_μ](X) = s_μ(X) p_{-λ}(X)` for `l(μ) = |X|` and
/// `|λ| <= μ_n`, with the operator applied through `mn_derive`.
pub fn mn_negative_composite(mu: &Partition, lambda: &Partition, x: &VarSet) -> Result<Complex64, AlgebraError> {
    let n = x.len();
    if mu.len() != n || lambda.size() > mu.part(n.max(1)) {
        return Err(AlgebraError::Precondition(format!(
            "need l(μ) = |X| and |λ| <= μ_n, got μ = {mu}, λ = {lambda}, |X| = {n}"
        )));
    }
    let mut f = SchurExpansion::basis(mu.clone());
    for &k in lambda.parts() {
        f = mn_derive(k, &f);
    }
    let lhs = f.evaluate(x)?;
    let rhs = schur(mu, x)? * basis_eval(BasisKind::PowersumNeg, lambda, x)?;
    agree(lhs, rhs)
}

/// Both sides of `LS_μ(X; Y) [p_k(X) + (-1)^{k-1} p_k(Y)] = Σ (-1)^{ht} LS_λ(X; Y)`
/// over `k`-ribbons `λ ∖ μ`.
pub fn ls_mn_sides(mu: &Partition, k: usize, x: &VarSet, y: &VarSet) -> Result<(Complex64, Complex64), SymError> {
    let sign = parity_sign(k + 1) as f64;
    let lhs = ls_eval(mu, x, y)? * (power_sum(k, x) + power_sum(k, y) * sign);
    let mut rhs = Complex64::new(0.0, 0.0);
    for step in ribbons_added(mu, k, None) {
        rhs += ls_eval(&step.to, x, y)? * parity_sign(step.height) as f64;
    }
    Ok((lhs, rhs))
}
