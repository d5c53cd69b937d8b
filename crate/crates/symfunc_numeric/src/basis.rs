use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use partition_core::Partition;
use serde::{Deserialize, Serialize};

use crate::{SymError, VarSet};

/// Classical bases of symmetric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    /// Monomial `m_λ`.
    Monomial,
    /// Elementary `e_λ`.
    Elementary,
    /// Complete homogeneous `h_λ`.
    Complete,
    /// Power sum `p_λ`.
    Powersum,
    /// Power sum at inverted variables, `p_{-λ}(X) = p_λ(X^{-1})`.
    PowersumNeg,
}

impl FromStr for BasisKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monomial" => Ok(BasisKind::Monomial),
            "elementary" => Ok(BasisKind::Elementary),
            "complete" => Ok(BasisKind::Complete),
            "powersum" => Ok(BasisKind::Powersum),
            "powersum_neg" => Ok(BasisKind::PowersumNeg),
            other => Err(format!("unknown basis {other:?}")),
        }
    }
}

/// Elementary symmetric polynomial `e_r(X)`.
pub fn elementary(r: usize, x: &VarSet) -> Complex64 {
    let mut e = vec![Complex64::new(0.0, 0.0); r + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for &xi in x.values() {
        for j in (1..=r).rev() {
            let prev = e[j - 1];
            e[j] += xi * prev;
        }
    }
    e[r]
}

/// Complete homogeneous polynomial `h_r(X)`.
pub fn complete(r: usize, x: &VarSet) -> Complex64 {
    let mut h = vec![Complex64::new(0.0, 0.0); r + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &xi in x.values() {
        for j in 1..=r {
            let prev = h[j - 1];
            h[j] += xi * prev;
        }
    }
    h[r]
}

/// Power sum `p_k(X) = Σ x^k`.
pub fn power_sum(k: usize, x: &VarSet) -> Complex64 {
    x.values().iter().map(|v| v.powu(k as u32)).sum()
}

fn monomial(lambda: &Partition, x: &VarSet) -> Complex64 {
    let n = x.len();
    if lambda.len() > n {
        return Complex64::new(0.0, 0.0);
    }
    let mut counts: BTreeMap<usize, usize> = lambda.multiplicities();
    *counts.entry(0).or_insert(0) += n - lambda.len();
    fn rec(i: usize, vals: &[Complex64], counts: &mut BTreeMap<usize, usize>) -> Complex64 {
        if i == vals.len() {
            return Complex64::new(1.0, 0.0);
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        let mut total = Complex64::new(0.0, 0.0);
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            total += vals[i].powu(k as u32) * rec(i + 1, vals, counts);
            *counts.get_mut(&k).unwrap() += 1;
        }
        total
    }
    rec(0, x.values(), &mut counts)
}

/// Evaluates the basis element of the given kind at `X`.
pub fn basis_eval(kind: BasisKind, lambda: &Partition, x: &VarSet) -> Result<Complex64, SymError> {
    let parts = lambda.parts();
    Ok(match kind {
        BasisKind::Monomial => monomial(lambda, x),
        BasisKind::Elementary => parts.iter().map(|&r| elementary(r, x)).product(),
        BasisKind::Complete => parts.iter().map(|&r| complete(r, x)).product(),
        BasisKind::Powersum => parts.iter().map(|&k| power_sum(k, x)).product(),
        BasisKind::PowersumNeg => {
            let inv = x.inv().ok_or(SymError::ZeroVariable)?;
            parts.iter().map(|&k| power_sum(k, &inv)).product()
        }
    })
}
