use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use partition_core::{Partition, PartitionError};

use crate::{delta, SymError, VarSet};

/// Minimum pairwise separation accepted by determinant formulas.
pub const DELTA_MIN: f64 = 1e-6;

/// Largest diagram accepted by tableau enumeration by default.
pub const DEFAULT_BOX_CAP: usize = 20;

/// `s_λ(X)` as the bialternant `det(x_i^{λ_j + n - j}) / Δ(X)`.
pub fn schur_det(lambda: &Partition, x: &VarSet) -> Result<Complex64, SymError> {
    let n = x.len();
    if lambda.len() > n {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sep = x.min_separation();
    if sep < DELTA_MIN {
        return Err(SymError::IllConditioned { min_sep: sep, required: DELTA_MIN });
    }
    let m = DMatrix::from_fn(n, n, |i, j| x[i].powu((lambda.part(j + 1) + n - 1 - j) as u32));
    Ok(m.determinant() / delta(x))
}

/// `s_λ(X)` summed over semistandard tableaux, at most [`DEFAULT_BOX_CAP`] boxes.
pub fn schur_comb(lambda: &Partition, x: &VarSet) -> Result<Complex64, SymError> {
    schur_comb_capped(lambda, x, DEFAULT_BOX_CAP)
}

/// `s_λ(X)` summed over semistandard tableaux with an explicit box cap.
pub fn schur_comb_capped(lambda: &Partition, x: &VarSet, cap: usize) -> Result<Complex64, SymError> {
    skew_schur_comb(lambda, &Partition::empty(), x, cap)
}

/// Schur function by determinant when the variables are separated, by
/// tableaux otherwise.
pub fn schur(lambda: &Partition, x: &VarSet) -> Result<Complex64, SymError> {
    match schur_det(lambda, x) {
        Err(SymError::IllConditioned { .. }) => schur_comb_capped(lambda, x, usize::MAX),
        r => r,
    }
}

struct SkewTableaux<'a> {
    inner: &'a [usize],
    vars: &'a [Complex64],
    memo: HashMap<(Vec<usize>, usize), Complex64>,
}

impl SkewTableaux<'_> {
    fn inner(&self, i: usize) -> usize {
        self.inner.get(i).copied().unwrap_or(0)
    }

    fn fits(&self, shape: &[usize], letters: usize) -> bool {
        (0..shape.len()).all(|i| i < letters || shape[i] <= self.inner(i - letters))
    }

    /// Tableaux of shape `shape / inner` with entries in `1..=j`, grouped
    /// by the horizontal strip of entries equal to `j`.
    fn eval(&mut self, shape: Vec<usize>, j: usize) -> Complex64 {
        if j == 0 {
            let done = (0..shape.len().max(self.inner.len()))
                .all(|i| shape.get(i).copied().unwrap_or(0) == self.inner(i));
            return Complex64::new(if done { 1.0 } else { 0.0 }, 0.0);
        }
        if !self.fits(&shape, j) {
            return Complex64::new(0.0, 0.0);
        }
        if let Some(v) = self.memo.get(&(shape.clone(), j)) {
            return *v;
        }
        let size: usize = shape.iter().sum();
        let xj = self.vars[j - 1];
        let mut total = Complex64::new(0.0, 0.0);
        for nu in horizontal_strips(&shape, self.inner) {
            let removed = size - nu.iter().sum::<usize>();
            total += self.eval(nu, j - 1) * xj.powu(removed as u32);
        }
        self.memo.insert((shape, j), total);
        total
    }
}

/// All `ν` with `inner ⊂ ν ⊂ shape` and `shape / ν` a horizontal strip.
fn horizontal_strips(shape: &[usize], inner: &[usize]) -> Vec<Vec<usize>> {
    fn rec(i: usize, shape: &[usize], inner: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() {
            let mut nu = cur.clone();
            while nu.last() == Some(&0) {
                nu.pop();
            }
            out.push(nu);
            return;
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let lo = below.max(inner.get(i).copied().unwrap_or(0));
        for v in lo..=shape[i] {
            cur.push(v);
            rec(i + 1, shape, inner, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, shape, inner, &mut Vec::new(), &mut out);
    out
}

/// Skew Schur function `s_{λ/κ}(X)` summed over semistandard tableaux.
pub fn skew_schur_comb(lambda: &Partition, kappa: &Partition, x: &VarSet, cap: usize) -> Result<Complex64, SymError> {
    if !lambda.contains(kappa) {
        return Err(SymError::Partition(PartitionError::NotContained {
            inner: kappa.clone(),
            outer: lambda.clone(),
        }));
    }
    let size = lambda.size() - kappa.size();
    if size > cap {
        return Err(SymError::TooLarge { size, cap });
    }
    let mut t = SkewTableaux { inner: kappa.parts(), vars: x.values(), memo: HashMap::new() };
    Ok(t.eval(lambda.parts().to_vec(), x.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{basis_eval, rel_err, BasisKind};
    use partition_core::partitions_up_to;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sample() -> VarSet {
        VarSet::new(vec![Complex64::new(0.3, 0.4), Complex64::new(-1.1, 0.2), Complex64::new(0.7, -0.5)])
    }

    #[test]
    fn tableau_counts_at_ones() {
        let ones = VarSet::real(&[1.0; 3]);
        assert_eq!(schur_comb(&p(&[2, 1]), &ones).unwrap().re, 8.0);
        assert_eq!(schur_comb(&p(&[2, 2]), &ones).unwrap().re, 6.0);
        assert_eq!(schur_comb(&p(&[1, 1, 1, 1]), &ones).unwrap().re, 0.0);
        let two = VarSet::real(&[1.0; 2]);
        assert_eq!(schur_comb(&p(&[2]), &two).unwrap().re, 3.0);
        assert_eq!(skew_schur_comb(&p(&[2, 1]), &p(&[1]), &two, 20).unwrap().re, 4.0);
    }

    #[test]
    fn rows_and_columns() {
        let x = sample();
        for k in 0..6 {
            let h = basis_eval(BasisKind::Complete, &Partition::rectangle(k, 1), &x).unwrap();
            let e = basis_eval(BasisKind::Elementary, &Partition::rectangle(k, 1), &x).unwrap();
            assert!(rel_err(schur_comb(&Partition::rectangle(k, 1), &x).unwrap(), h) < 1e-12);
            assert!(rel_err(schur_comb(&Partition::rectangle(1, k), &x).unwrap(), e) < 1e-12);
        }
    }

    #[test]
    fn det_and_comb_agree() {
        let x = sample();
        for lam in partitions_up_to(8) {
            let a = schur_det(&lam, &x).unwrap();
            let b = schur_comb(&lam, &x).unwrap();
            assert!(rel_err(a, b) < 1e-10, "{lam}: {a} vs {b}");
        }
    }

    #[test]
    fn det_rejects_close_variables() {
        let x = VarSet::real(&[0.5, 0.5 + 1e-9]);
        assert!(matches!(schur_det(&p(&[1]), &x), Err(SymError::IllConditioned { .. })));
        assert!(schur(&p(&[1]), &x).is_ok());
    }

    #[test]
    fn comb_cap() {
        let x = VarSet::real(&[1.0]);
        assert_eq!(schur_comb(&Partition::rectangle(21, 1), &x), Err(SymError::TooLarge { size: 21, cap: 20 }));
    }
}
