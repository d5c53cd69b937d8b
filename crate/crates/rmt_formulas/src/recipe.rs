use std::collections::BTreeMap;

use partition_core::Partition;
use serde::{Deserialize, Serialize};
use symfunc_numeric::{basis_eval, delta2, e_prod, power_sum, BasisKind, Complex64, VarSet};

use crate::logders::{Truncation, TruncatedValue};
use crate::ratios::{check_inside, check_nonzero, merged, pair_product};
use crate::{partitions_exact_len, partitions_of_len, RmtError};

/// The six alphabets and the matrix size of a mixed ratio average.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct RecipeInput {
    /// Numerator variables of `χ_g`.
    pub A: VarSet,
    /// Numerator variables of `χ_{g^{-1}}`.
    pub B: VarSet,
    /// Denominator variables of `χ_{g^{-1}}`.
    pub C: VarSet,
    /// Denominator variables of `χ_g`.
    pub D: VarSet,
    /// Logarithmic derivative variables of `χ_g`.
    pub E: VarSet,
    /// Logarithmic derivative variables of `χ_{g^{-1}}`.
    pub F: VarSet,
    /// Matrix size.
    pub N: usize,
}

impl RecipeInput {
    /// All alphabets empty.
    pub fn empty(n: usize) -> Self {
        RecipeInput {
            A: VarSet::empty(),
            B: VarSet::empty(),
            C: VarSet::empty(),
            D: VarSet::empty(),
            E: VarSet::empty(),
            F: VarSet::empty(),
            N: n,
        }
    }
}

/// `𝔭_k(ρ^α_X ∪ ρ^β_Y) = p_k(X) + (-1)^{k-1} p_k(Y)`.
pub fn specialized_power_sum(k: usize, alpha: &VarSet, beta: &VarSet) -> Complex64 {
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    power_sum(k, alpha) + power_sum(k, beta) * sign
}

/// The `(λ, ξ)` sum of the main term with the Cauchy factor
/// `Σ_λ z_λ^{-1} 𝔭_λ(ρ) 𝔭_λ(C)` divided out:
///
/// `Σ_{ω ∪ ξ = ψ ∪ λ} z_λ^{-1} 𝔭_λ(ρ) ∏_i i^{m_i(ω)} m_i(ψ ∪ λ)! / m_i(ξ)! p_ξ(C)`
/// divided by `exp(Σ_i 𝔭_i(ρ) p_i(C) / i)`, where `rho(i)` is `𝔭_i(ρ)` and
/// `c(i)` is `p_i(C)`.
///
/// For each part size `i` the sum over the multiplicity `j` of `i` in `λ` is
/// `∂_c^w [c^s e^{tc}]` with `w = m_i(ω)`, `s = m_i(ψ)` and `t = 𝔭_i(ρ)/i`;
/// dividing by `e^{tc}` leaves `Σ_r C(w, r) s!/(s-r)! c^{s-r} t^{w-r}`.
pub fn matching_weight(
    psi: &Partition,
    omega: &Partition,
    rho: impl Fn(usize) -> Complex64,
    c: impl Fn(usize) -> Complex64,
) -> Complex64 {
    let mut sizes: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (i, w) in omega.multiplicities() {
        sizes.entry(i).or_default().0 = w;
    }
    for (i, s) in psi.multiplicities() {
        sizes.entry(i).or_default().1 = s;
    }
    let mut total = Complex64::new(1.0, 0.0);
    for (i, (w, s)) in sizes {
        let t = rho(i) / i as f64;
        let ci = c(i);
        let mut g = Complex64::new(0.0, 0.0);
        let mut binom = 1.0;
        let mut fall = 1.0;
        for r in 0..=w.min(s) {
            if r > 0 {
                binom = binom * (w + 1 - r) as f64 / r as f64;
                fall *= (s + 1 - r) as f64;
            }
            g += ci.powu((s - r) as u32) * t.powu((w - r) as u32) * (binom * fall);
        }
        total *= g * (i as f64).powi(w as i32);
        if total == Complex64::new(0.0, 0.0) {
            break;
        }
    }
    total
}

fn subsets(x: &VarSet) -> Vec<(VarSet, VarSet)> {
    let n = x.len();
    (0..(1u32 << n))
        .map(|mask| {
            let (inn, out): (Vec<usize>, Vec<usize>) = (0..n).partition(|i| mask >> i & 1 == 1);
            (x.pick(&inn), x.pick(&out))
        })
        .collect()
}

/// Main term of the Recipe for
/// `∫ ∏_A χ_g(α) ∏_B χ_{g^{-1}}(β) / (∏_D χ_g(δ) ∏_C χ_{g^{-1}}(γ))
///  × ∏_E χ_g'(ε)/χ_g(ε) ∏_F χ_{g^{-1}}'(φ)/χ_{g^{-1}}(φ) dg`.
///
/// The only infinite sum left is over `ψ`, whose parts are cut at
/// `max(P, N)`. The reported tail is an estimate: the largest contribution of
/// a `ψ` with maximal first part times `ρ / (1 - ρ)`, `ρ = max|E| max|C|`.
pub fn recipe_main(input: &RecipeInput, max_part: usize) -> Result<TruncatedValue, RmtError> {
    let RecipeInput { A: a, B: b, C: c, D: d, E: e, F: f, N: n } = input;
    let n = *n;
    let x = merged(a, b)?;
    for (set, name) in [(c, "C"), (d, "D"), (e, "E"), (f, "F")] {
        check_nonzero(set, name)?;
        check_inside(set, name)?;
    }
    if d.len() > a.len() {
        return Err(RmtError::Precondition(format!("need l(D) <= l(A), got {} > {}", d.len(), a.len())));
    }
    let cap = max_part.max(n);
    let max_len = e.len().max(f.len());
    let zero = Complex64::new(0.0, 0.0);
    if c.len() > n {
        return Ok(TruncatedValue { value: zero, truncation: Truncation { max_part: cap, max_len, tail_bound: 0.0 } });
    }
    let budget = n - c.len();
    let rho_tail = e.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
        * c.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
    let cd = pair_product(c, d);
    let exp = (n + a.len() - d.len()) as i32;
    let sign = if (e.len() + f.len()) % 2 == 0 { 1.0 } else { -1.0 };
    let omegas: Vec<Vec<(Partition, Complex64)>> = (0..=budget)
        .map(|size| {
            partitions_of_len(size, f.len())
                .into_iter()
                .map(|om| {
                    let m = basis_eval(BasisKind::Monomial, &om.minus_ones(), f)?;
                    Ok((om, m))
                })
                .collect::<Result<Vec<_>, RmtError>>()
        })
        .collect::<Result<_, _>>()?;
    let c_pow: Vec<Complex64> = (0..=cap).map(|i| power_sum(i, c)).collect();

    let mut total = zero;
    let mut shell = 0.0f64;
    for (s, t) in x.splits(b.len()) {
        let pre = e_prod(&s.neg()).powi(exp) * delta2(d, &s) / delta2(&t, &s) * pair_product(&t, c) / cd;
        let neg_t = t.neg();
        let rho: Vec<Complex64> = (0..=cap).map(|i| specialized_power_sum(i, d, &neg_t)).collect();
        let neg_s = s.neg();
        let mut inner = zero;
        for (e2, e1) in subsets(e) {
            let neg_e2 = e2.neg();
            let mut xi = vec![zero; budget + 1];
            for (q, slot) in xi.iter_mut().enumerate() {
                for chi in partitions_of_len(q, e2.len()) {
                    let m = basis_eval(BasisKind::Monomial, &chi.minus_ones(), &neg_e2)?;
                    if m != zero {
                        *slot += m * basis_eval(BasisKind::PowersumNeg, &chi, &neg_s)?;
                    }
                }
            }
            let psis: Vec<(Partition, Complex64)> = partitions_exact_len(e1.len(), cap)
                .into_iter()
                .map(|ps| {
                    let m = basis_eval(BasisKind::Monomial, &ps.minus_ones(), &e1)?;
                    Ok((ps, m))
                })
                .collect::<Result<_, RmtError>>()?;
            let mut om_sum = vec![zero; budget + 1];
            for (size, slot) in om_sum.iter_mut().enumerate() {
                for (om, m_om) in &omegas[size] {
                    for (ps, m_ps) in &psis {
                        let w = matching_weight(ps, om, |i| rho[i], |i| c_pow[i]);
                        let term = *m_om * *m_ps * w;
                        if ps.first() == cap && !e1.is_empty() {
                            shell = shell.max((term * pre).norm());
                        }
                        *slot += term;
                    }
                }
            }
            for (q, xq) in xi.iter().enumerate() {
                if *xq == zero {
                    continue;
                }
                let rest: Complex64 = om_sum[..=(budget - q)].iter().sum();
                inner += *xq * rest;
            }
        }
        total += pre * inner;
    }
    let value = e_prod(&b.neg()).powu(n as u32) * total * sign;
    let lead = e_prod(&b.neg()).powu(n as u32).norm();
    let tail_bound = if rho_tail > 0.0 { lead * shell * rho_tail / (1.0 - rho_tail) } else { 0.0 };
    Ok(TruncatedValue { value, truncation: Truncation { max_part: cap, max_len, tail_bound } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{logders_main, ratio_avg, DEFAULT_MAX_PART};
    use symfunc_numeric::rel_err;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn vs(v: &[(f64, f64)]) -> VarSet {
        VarSet::new(v.iter().map(|&(a, b)| c(a, b)).collect())
    }

    #[test]
    fn reduces_to_ratios() {
        let mut inp = RecipeInput::empty(6);
        inp.A = vs(&[(0.4, 0.3), (-0.7, 0.5)]);
        inp.B = vs(&[(1.1, -0.2)]);
        inp.C = vs(&[(0.2, 0.3), (-0.1, 0.4)]);
        inp.D = vs(&[(0.3, -0.3)]);
        let r = recipe_main(&inp, DEFAULT_MAX_PART).unwrap();
        let v = ratio_avg(&inp.A, &inp.B, &inp.C, &inp.D, 6).unwrap();
        assert!(rel_err(r.value, v) < 1e-12);
    }

    #[test]
    fn reduces_to_logders() {
        let mut inp = RecipeInput::empty(40);
        inp.E = vs(&[(0.3, 0.1), (-0.2, 0.3)]);
        inp.F = vs(&[(0.25, -0.2), (0.1, 0.35)]);
        let r = recipe_main(&inp, DEFAULT_MAX_PART).unwrap();
        let v = logders_main(&inp.E, &inp.F, DEFAULT_MAX_PART).unwrap();
        assert!(rel_err(r.value, v.value) < 1e-10, "{} {}", r.value, v.value);
    }

    #[test]
    fn single_log_derivative_with_b() {
        let beta = c(0.8, 0.3);
        let eps = c(0.3, -0.2);
        let mut inp = RecipeInput::empty(7);
        inp.B = VarSet::new(vec![beta]);
        inp.E = VarSet::new(vec![eps]);
        let r = recipe_main(&inp, DEFAULT_MAX_PART).unwrap();
        let exact: Complex64 = (0..7).map(|m| beta * (eps * beta).powu(m)).sum();
        assert!(rel_err(r.value, exact) < 1e-12);
    }

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|i| i as f64).product()
    }

    #[test]
    fn matching_weight_against_enumeration() {
        let rho = |i: usize| c(0.3, 0.1).powu(i as u32) - c(-0.4, 0.2).powu(i as u32);
        let cc = |i: usize| c(0.2, -0.3).powu(i as u32) + c(0.1, 0.25).powu(i as u32);
        let cauchy: Complex64 = (1..80).map(|i| rho(i) * cc(i) / i as f64).sum::<Complex64>().exp();
        let cases = [(vec![2, 1], vec![2]), (vec![1, 1], vec![3, 1]), (vec![], vec![2, 2]), (vec![3], vec![])];
        for (ps, om) in cases {
            let (psi, omega) = (Partition::new(ps).unwrap(), Partition::new(om).unwrap());
            let mut direct = c(0.0, 0.0);
            for size in 0..=14 {
                for lam in partition_core::partitions_of(size) {
                    let lhs = psi.union(&lam);
                    let Some(xi) = lhs.multiset_minus(&omega) else { continue };
                    let mut w = 1.0;
                    for (i, m) in lhs.multiplicities() {
                        w *= factorial(m) / factorial(xi.multiplicity(i));
                    }
                    for (i, m) in omega.multiplicities() {
                        w *= (i as f64).powi(m as i32);
                    }
                    let p_lam: Complex64 = lam.parts().iter().map(|&i| rho(i)).product();
                    let p_xi: Complex64 = xi.parts().iter().map(|&i| cc(i)).product();
                    direct += p_lam * p_xi * w / lam.z_f64();
                }
            }
            let closed = matching_weight(&psi, &omega, rho, cc) * cauchy;
            assert!(rel_err(closed, direct) < 1e-9, "{psi} {omega}: {closed} {direct}");
        }
    }
}
