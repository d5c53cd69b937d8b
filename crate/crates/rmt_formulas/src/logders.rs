use partition_core::Partition;
use serde::{Deserialize, Serialize};
use symfunc_numeric::{basis_eval, BasisKind, Complex64, VarSet};

use crate::ratios::check_nonzero;
use crate::{partitions_exact_len, RmtError};

/// Default largest part kept in truncated partition sums.
pub const DEFAULT_MAX_PART: usize = 60;

/// Description of how an infinite partition sum was cut off.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Truncation {
    /// Largest part kept.
    #[serde(rename = "P")]
    pub max_part: usize,
    /// Largest length kept.
    #[serde(rename = "L")]
    pub max_len: usize,
    /// Bound on the absolute value of the discarded terms.
    pub tail_bound: f64,
}

/// A truncated sum together with its truncation data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedValue {
    /// Value of the kept terms.
    pub value: Complex64,
    /// Truncation data.
    pub truncation: Truncation,
}

fn max_abs(x: &VarSet) -> f64 {
    x.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

/// `Σ_{p > P} p ρ^{p - 1}` and `Σ_{p >= 1} p ρ^{p - 1}`.
fn geometric_tails(rho: f64, p: usize) -> (f64, f64) {
    let d = (1.0 - rho) * (1.0 - rho);
    let pf = p as f64;
    (rho.powi(p as i32) * ((pf + 1.0) - pf * rho) / d, 1.0 / d)
}

fn check_radius(e: &VarSet, f: &VarSet) -> Result<(), RmtError> {
    check_nonzero(e, "E")?;
    check_nonzero(f, "F")?;
    if max_abs(e) * max_abs(f) >= 1.0 || !e.abs_below(1.0) || !f.abs_below(1.0) {
        return Err(RmtError::Precondition("E and F must lie strictly inside the unit circle".into()));
    }
    Ok(())
}

/// Main term of `∫ ∏_E χ_g'(ε)/χ_g(ε) ∏_F χ_{g^{-1}}'(φ)/χ_{g^{-1}}(φ) dg`,
/// `Σ_{l(λ) = l(E)} z_λ m_{λ - ⟨1^l⟩}(E) m_{λ - ⟨1^l⟩}(F)` over `λ_1 <= P`,
/// and 0 when `l(E) != l(F)`.
pub fn logders_main(e: &VarSet, f: &VarSet, max_part: usize) -> Result<TruncatedValue, RmtError> {
    check_radius(e, f)?;
    let l = e.len();
    let mut trunc = Truncation { max_part, max_len: l, tail_bound: 0.0 };
    if l != f.len() {
        return Ok(TruncatedValue { value: Complex64::new(0.0, 0.0), truncation: trunc });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for lam in partitions_exact_len(l, max_part) {
        let mu = lam.minus_ones();
        total += basis_eval(BasisKind::Monomial, &mu, e)? * basis_eval(BasisKind::Monomial, &mu, f)? * lam.z_f64();
    }
    if l > 0 {
        let rho = max_abs(e) * max_abs(f);
        let (tail, full) = geometric_tails(rho, max_part);
        let perms = falling(l, l);
        trunc.tail_bound = perms * perms * perms * l as f64 * tail * full.powi(l as i32 - 1);
    }
    Ok(TruncatedValue { value: total, truncation: trunc })
}

/// Main term of the average of `∏_E ε Λ_g'(ε)/Λ_g(ε) ∏_F φ Λ_{g^{-1}}'(φ)/Λ_{g^{-1}}(φ)`,
/// `Σ_λ (-N/2)^{l(E) + l(F) - 2 l(λ)} z_λ m_λ(E) m_λ(F)` over `λ_1 <= P`.
pub fn completed_logders_main(e: &VarSet, f: &VarSet, n: usize, max_part: usize) -> Result<TruncatedValue, RmtError> {
    check_radius(e, f)?;
    let lmax = e.len().min(f.len());
    let half = -(n as f64) / 2.0;
    let exp0 = e.len() + f.len();
    let mut total = Complex64::new(0.0, 0.0);
    let mut tail_bound = 0.0;
    let rho = max_abs(e) * max_abs(f);
    let (tail, full) = geometric_tails(rho, max_part);
    for l in 0..=lmax {
        let weight = half.powi((exp0 - 2 * l) as i32);
        let lams = if l == 0 { vec![Partition::empty()] } else { partitions_exact_len(l, max_part) };
        for lam in lams {
            let v = basis_eval(BasisKind::Monomial, &lam, e)? * basis_eval(BasisKind::Monomial, &lam, f)?;
            total += v * lam.z_f64() * weight;
        }
        if l > 0 {
            let counts = falling(e.len(), l) * falling(f.len(), l) * falling(l, l);
            tail_bound += weight.abs() * counts * l as f64 * rho.powi(l as i32) * tail * full.powi(l as i32 - 1);
        }
    }
    Ok(TruncatedValue { value: total, truncation: Truncation { max_part, max_len: lmax, tail_bound } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfunc_numeric::rel_err;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one() -> Complex64 {
        c(1.0, 0.0)
    }

    #[test]
    fn single_pair_closed_forms() {
        let (eps, phi) = (c(0.3, 0.1), c(-0.2, 0.25));
        let (e, f) = (VarSet::new(vec![eps]), VarSet::new(vec![phi]));
        let x = eps * phi;
        let v = logders_main(&e, &f, DEFAULT_MAX_PART).unwrap();
        assert!(rel_err(v.value, one() / ((one() - x) * (one() - x))) < 1e-14);
        assert!(v.truncation.tail_bound < 1e-10);
        let w = completed_logders_main(&e, &f, 12, DEFAULT_MAX_PART).unwrap();
        assert!(rel_err(w.value, c(36.0, 0.0) + x / ((one() - x) * (one() - x))) < 1e-14);
        assert!(w.truncation.tail_bound < 1e-10);
    }

    #[test]
    fn trivial_cases() {
        let e = VarSet::new(vec![c(0.3, 0.0)]);
        let empty = VarSet::empty();
        assert_eq!(logders_main(&e, &empty, 10).unwrap().value, c(0.0, 0.0));
        assert_eq!(logders_main(&empty, &empty, 10).unwrap().value, one());
        assert_eq!(completed_logders_main(&empty, &empty, 7, 10).unwrap().value, one());
        assert_eq!(completed_logders_main(&e, &empty, 8, 10).unwrap().value, c(-4.0, 0.0));
    }

    #[test]
    fn tail_bound_dominates_truncation_error() {
        let e = VarSet::new(vec![c(0.6, 0.1), c(-0.5, 0.3)]);
        let f = VarSet::new(vec![c(0.4, -0.5), c(0.7, 0.0)]);
        let exact = logders_main(&e, &f, 120).unwrap().value;
        for p in [10, 20, 30] {
            let v = logders_main(&e, &f, p).unwrap();
            assert!((v.value - exact).norm() <= v.truncation.tail_bound, "{p}");
            let w = completed_logders_main(&e, &f, 5, p).unwrap();
            let we = completed_logders_main(&e, &f, 5, 120).unwrap().value;
            assert!((w.value - we).norm() <= w.truncation.tail_bound, "{p}");
        }
        let v = logders_main(&e, &f, DEFAULT_MAX_PART).unwrap();
        assert!(v.truncation.tail_bound < 1e-10, "{}", v.truncation.tail_bound);
    }

    #[test]
    fn completed_from_subsets() {
        let e = VarSet::new(vec![c(0.3, 0.1), c(-0.2, 0.4)]);
        let f = VarSet::new(vec![c(0.1, -0.3), c(0.25, 0.2), c(-0.3, -0.1)]);
        let n = 6usize;
        let direct = completed_logders_main(&e, &f, n, DEFAULT_MAX_PART).unwrap().value;
        let mut via = c(0.0, 0.0);
        for me in 0..(1u32 << e.len()) {
            for mf in 0..(1u32 << f.len()) {
                let ie: Vec<usize> = (0..e.len()).filter(|i| me >> i & 1 == 1).collect();
                let jf: Vec<usize> = (0..f.len()).filter(|i| mf >> i & 1 == 1).collect();
                let (es, fs) = (e.pick(&ie), f.pick(&jf));
                let rest = (e.len() - ie.len() + f.len() - jf.len()) as i32;
                let pre = (-(n as f64) / 2.0).powi(rest);
                let prod: Complex64 = es.values().iter().chain(fs.values()).product();
                via += logders_main(&es, &fs, DEFAULT_MAX_PART).unwrap().value * prod * pre;
            }
        }
        assert!(rel_err(direct, via) < 1e-12);
    }
}
