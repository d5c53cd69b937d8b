use nalgebra::DMatrix;
use num_complex::Complex64;
use partition_core::{mn_index, parity_sign, partitions_bounded, Partition};

use crate::{delta, delta2, lr_contents, schur_comb_capped, skew_schur_comb, SymError, VarSet, DEFAULT_BOX_CAP, DELTA_MIN};

fn subdiagrams(lambda: &Partition, max_first: usize) -> Vec<Partition> {
    (0..=lambda.size())
        .flat_map(|s| partitions_bounded(s, lambda.len(), lambda.first().min(max_first)))
        .filter(|nu| lambda.contains(nu))
        .collect()
}

/// `LS_λ(X; Y) = Σ c^λ_{μν} s_μ(X) s_{ν'}(Y)` with tableau Schur factors.
pub fn ls_comb(lambda: &Partition, x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    if lambda.size() > DEFAULT_BOX_CAP {
        return Err(SymError::TooLarge { size: lambda.size(), cap: DEFAULT_BOX_CAP });
    }
    let mut total = Complex64::new(0.0, 0.0);
    for nu in subdiagrams(lambda, y.len()) {
        let sy = schur_comb_capped(&nu.conjugate(), y, usize::MAX)?;
        if sy == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (mu, c) in lr_contents(lambda, &nu) {
            if mu.len() > x.len() {
                continue;
            }
            total += sy * schur_comb_capped(&mu, x, usize::MAX)? * c as f64;
        }
    }
    Ok(total)
}

/// `LS_λ(X; Y) = Σ_μ s_μ(X) s_{λ'/μ'}(Y)` through skew tableaux.
pub fn ls_skew(lambda: &Partition, x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    let conj = lambda.conjugate();
    let mut total = Complex64::new(0.0, 0.0);
    for mu in subdiagrams(lambda, usize::MAX) {
        if mu.len() > x.len() {
            continue;
        }
        let sx = schur_comb_capped(&mu, x, usize::MAX)?;
        total += sx * skew_schur_comb(&conj, &mu.conjugate(), y, usize::MAX)?;
    }
    Ok(total)
}

/// `LS_λ(-X; Y)` through the block determinant, for `X ∪ Y` separated.
///
/// With `n = |X|`, `m = |Y|` and `k` the `(m, n)`-index of `λ`, the value is
/// zero for `k < 0`, and otherwise
/// `ε Δ(Y; X) / (Δ(X) Δ(Y))` times the determinant of
/// `[[ (x_i - y_j)^{-1}, x_i^{λ_j + n - m - j} ], [ y_j^{λ'_i + m - n - i}, 0 ]]`
/// with `j <= n - k` in the upper right block and `i <= m - k` in the lower
/// left block, where `ε = (-1)^{|λ_{[n-k]}| + mk + k(k-1)/2}`.
pub fn ls_det(lambda: &Partition, x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    let n = x.len();
    let m = y.len();
    let k = mn_index(lambda, m, n);
    if k < 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let all = x.concat(y);
    let sep = all.min_separation();
    if sep < DELTA_MIN {
        return Err(SymError::IllConditioned { min_sep: sep, required: DELTA_MIN });
    }
    let k = k as usize;
    let conj = lambda.conjugate();
    let size = n + m - k;
    let mut mat = DMatrix::from_element(size, size, Complex64::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..m {
            mat[(i, j)] = (x[i] - y[j]).inv();
        }
        for j in 1..=(n - k) {
            let e = lambda.part(j) + n + k - j - m - k;
            mat[(i, m + j - 1)] = x[i].powu(e as u32);
        }
    }
    for i in 1..=(m - k) {
        let e = conj.part(i) + m - n - i;
        for j in 0..m {
            mat[(n + i - 1, j)] = y[j].powu(e as u32);
        }
    }
    let head: usize = lambda.prefix(n - k).size();
    let eps = parity_sign(head + m * k + k * k.saturating_sub(1) / 2) as f64;
    let pref = delta2(y, x) / (delta(x) * delta(y));
    Ok(mat.determinant() * pref * eps)
}

/// `LS_λ(X; Y)`, by determinant when `-X ∪ Y` is separated and by
/// tableaux otherwise.
pub fn ls_eval(lambda: &Partition, x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    match ls_det(lambda, &x.neg(), y) {
        Err(SymError::IllConditioned { .. }) => ls_comb(lambda, x, y),
        r => r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rel_err, schur_det};
    use partition_core::partitions_up_to;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn xs() -> VarSet {
        VarSet::new(vec![c(0.4, 0.3), c(-0.9, 0.5), c(1.2, -0.2)])
    }

    fn ys() -> VarSet {
        VarSet::new(vec![c(0.6, -0.7), c(-0.35, -0.45), c(0.8, 0.9)])
    }

    #[test]
    fn reduces_to_schur() {
        let x = xs();
        for lam in partitions_up_to(6) {
            let a = ls_comb(&lam, &x, &VarSet::empty()).unwrap();
            let b = schur_comb_capped(&lam, &x, 20).unwrap();
            assert!(rel_err(a, b) < 1e-12);
            let d = ls_comb(&lam, &VarSet::empty(), &x).unwrap();
            let e = schur_comb_capped(&lam.conjugate(), &x, 20).unwrap();
            assert!(rel_err(d, e) < 1e-12);
        }
    }

    #[test]
    fn comb_and_skew_agree() {
        let (x, y) = (xs(), ys());
        for lam in partitions_up_to(7) {
            for nx in 0..=3 {
                for ny in 0..=3 {
                    let xa = x.pick(&(0..nx).collect::<Vec<_>>());
                    let ya = y.pick(&(0..ny).collect::<Vec<_>>());
                    let a = ls_comb(&lam, &xa, &ya).unwrap();
                    let b = ls_skew(&lam, &xa, &ya).unwrap();
                    assert!(rel_err(a, b) < 1e-11, "{lam} {nx} {ny}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn det_matches_comb() {
        let (x, y) = (xs(), ys());
        for lam in partitions_up_to(8) {
            for nx in 0..=3 {
                for ny in 0..=3 {
                    let xa = x.pick(&(0..nx).collect::<Vec<_>>());
                    let ya = y.pick(&(0..ny).collect::<Vec<_>>());
                    let a = ls_det(&lam, &xa, &ya).unwrap();
                    let b = ls_comb(&lam, &xa.neg(), &ya).unwrap();
                    assert!(rel_err(a, b) < 1e-9, "{lam} n={nx} m={ny}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn vanishing_outside_hook() {
        let x = xs().pick(&[0, 1]);
        let y = ys().pick(&[0]);
        let lam = p(&[2, 2, 2]);
        assert_eq!(mn_index(&lam, 1, 2), -1);
        assert_eq!(ls_det(&lam, &x, &y).unwrap(), c(0.0, 0.0));
        assert!(ls_comb(&lam, &x, &y).unwrap().norm() < 1e-14);
    }

    #[test]
    fn index_zero_factorizes() {
        let x = xs();
        let y = ys().pick(&[0, 1]);
        let lam = p(&[4, 3, 2]);
        let a = ls_det(&lam, &x, &y).unwrap();
        let b = delta2(&y, &x) * schur_det(&p(&[2, 1]), &x.neg()).unwrap();
        assert!(rel_err(a, b) < 1e-12);
    }

    #[test]
    fn surplus_example() {
        let x = VarSet::new(vec![c(0.4, 0.3), c(-0.9, 0.5)]);
        let y = ys();
        let lam = p(&[1, 1, 1]);
        assert_eq!(mn_index(&lam, 3, 2), 2);
        let a = ls_det(&lam, &x, &y).unwrap();
        let b = ls_comb(&lam, &x.neg(), &y).unwrap();
        assert!(rel_err(a, b) < 1e-12);
    }

    #[test]
    fn ill_conditioned_falls_back() {
        let x = VarSet::real(&[0.5]);
        let y = VarSet::real(&[-0.5]);
        assert!(ls_det(&p(&[2, 1]), &x, &VarSet::real(&[0.5])).is_err());
        let a = ls_eval(&p(&[2, 1]), &x, &y).unwrap();
        let b = ls_comb(&p(&[2, 1]), &x, &y).unwrap();
        assert!(rel_err(a, b) < 1e-14);
    }
}
