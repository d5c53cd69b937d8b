use symfunc_numeric::{delta2, e_prod, Complex64, VarSet, DELTA_MIN};

use crate::RmtError;

pub(crate) fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

pub(crate) fn check_nonzero(x: &VarSet, name: &str) -> Result<(), RmtError> {
    if x.values().iter().any(|v| v.norm() == 0.0) {
        return Err(RmtError::Precondition(format!("{name} must not contain 0")));
    }
    Ok(())
}

pub(crate) fn check_inside(x: &VarSet, name: &str) -> Result<(), RmtError> {
    if !x.abs_below(1.0) {
        return Err(RmtError::Precondition(format!("{name} must lie strictly inside the unit circle")));
    }
    Ok(())
}

/// `A ∪ B^{-1}`, checked to be pairwise distinct.
pub(crate) fn merged(a: &VarSet, b: &VarSet) -> Result<VarSet, RmtError> {
    check_nonzero(a, "A")?;
    check_nonzero(b, "B")?;
    let x = a.concat(&b.inv().expect("nonzero"));
    if !x.pairwise_distinct(DELTA_MIN) {
        return Err(RmtError::Precondition("A ∪ B^{-1} must be pairwise distinct".into()));
    }
    Ok(x)
}

/// `∏_{x ∈ X, y ∈ Y} (1 - xy)`.
pub(crate) fn pair_product(x: &VarSet, y: &VarSet) -> Complex64 {
    x.values().iter().flat_map(|a| y.values().iter().map(move |b| one() - a * b)).product()
}

/// Main term of `∫ ∏_A χ_g(α) ∏_B χ_{g^{-1}}(β) / (∏_D χ_g(δ) ∏_C χ_{g^{-1}}(γ)) dg`:
///
/// `e(-B)^N Σ_{S ∪ T = A ∪ B^{-1}} e(-S)^{N + l(A) - l(D)} Δ(D; S) / Δ(T; S)
///  × ∏ (1 - γδ)^{-1} ∏_{t ∈ T} (1 - tγ)` with `|S| = l(B)`.
pub fn ratio_avg(a: &VarSet, b: &VarSet, c: &VarSet, d: &VarSet, n: usize) -> Result<Complex64, RmtError> {
    let x = merged(a, b)?;
    check_nonzero(c, "C")?;
    check_nonzero(d, "D")?;
    check_inside(c, "C")?;
    check_inside(d, "D")?;
    if d.len() > n + a.len() || c.len() > n {
        return Err(RmtError::Precondition(format!(
            "need l(D) <= N + l(A) and l(C) <= N, got l(C) = {}, l(D) = {}, l(A) = {}, N = {n}",
            c.len(),
            d.len(),
            a.len()
        )));
    }
    let exp = (n + a.len()) as i64 - d.len() as i64;
    let cd = pair_product(c, d);
    let mut total = Complex64::new(0.0, 0.0);
    for (s, t) in x.splits(b.len()) {
        let es = e_prod(&s.neg()).powi(exp as i32);
        total += es * delta2(d, &s) / delta2(&t, &s) * pair_product(&t, c);
    }
    Ok(e_prod(&b.neg()).powu(n as u32) * total / cd)
}
