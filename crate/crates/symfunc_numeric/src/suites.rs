//! Randomized numerical suites for Littlewood-Schur properties and the
//! Cauchy family of identities.

use num_complex::Complex64;
use partition_core::{partitions_bounded, partitions_in_box, partitions_up_to, Partition};

use crate::sampling::{annulus_point, instance_rng, random_partition, random_permutation, separated_points};
use crate::{delta2, ls_comb, ls_det, ls_eval, rel_err, schur_det, SymError, VarSet, VerificationReport};

/// Relative tolerance for the property suite.
pub const PROPERTY_TOL: f64 = 1e-7;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn worst(errs: impl IntoIterator<Item = f64>) -> f64 {
    errs.into_iter().fold(0.0, f64::max)
}

fn permuted(x: &VarSet, perm: &[usize]) -> VarSet {
    x.pick(perm)
}

/// The five structural properties of `LS_λ(-X; Y)`: homogeneity, symmetry
/// in each alphabet, restriction, cancellation and factorization.
pub fn ls_properties(seed: u64, instances: usize) -> Result<Vec<VerificationReport>, SymError> {
    let mut errs = vec![Vec::new(); 5];
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let n = (i % 4) as usize;
        let m = ((i / 4) % 4) as usize;
        let lam = random_partition(&mut rng, 8, n + m, 8);
        let x = separated_points(&mut rng, n, 0.3, 1.5, 0.05, &VarSet::empty());
        let y = separated_points(&mut rng, m, 0.3, 1.5, 0.05, &x);
        let base = ls_det(&lam, &x, &y)?;

        let a = annulus_point(&mut rng, 0.5, 1.5);
        let scaled = ls_det(&lam, &x.scale(a), &y.scale(a))?;
        errs[0].push(rel_err(scaled, base * a.powu(lam.size() as u32)));

        let px = permuted(&x, &random_permutation(&mut rng, n));
        let py = permuted(&y, &random_permutation(&mut rng, m));
        errs[1].push(rel_err(ls_det(&lam, &px, &py)?, base));

        let zero = Complex64::new(0.0, 0.0);
        let rx = ls_det(&lam, &x.with(zero), &y)?;
        let ry = ls_det(&lam, &x, &y.with(zero))?;
        let rc = ls_comb(&lam, &x.neg().with(zero), &y.with(zero))?;
        errs[2].push(rel_err(rx, base).max(rel_err(ry, base)).max(rel_err(rc, base)));

        let t = annulus_point(&mut rng, 0.3, 1.5);
        let reduced = ls_comb(&lam, &x.neg().with(-t), &y.with(t))?;
        errs[3].push(rel_err(reduced, ls_comb(&lam, &x.neg(), &y)?));

        let alpha = random_partition(&mut rng, 4, n, 4);
        let beta = random_partition(&mut rng, 4, m, 4);
        let big = Partition::rectangle(m, n).add(&alpha);
        let fac = big.concat_padded(n, &beta.conjugate())?;
        let lhs = ls_det(&fac, &x, &y)?;
        let rhs = delta2(&y, &x) * schur_det(&alpha, &x.neg())? * schur_det(&beta, &y)?;
        errs[4].push(rel_err(lhs, rhs));
    }
    let names = ["ls-homogeneity", "ls-symmetry", "ls-restriction", "ls-cancellation", "ls-factorization"];
    Ok(names
        .iter()
        .zip(errs)
        .map(|(name, e)| VerificationReport::new(name, seed, instances, worst(e), PROPERTY_TOL))
        .collect())
}

/// `∏_{x, y} (1 - xy)^{-1}`.
pub fn cauchy_product(x: &VarSet, y: &VarSet) -> Complex64 {
    let mut p = one();
    for a in x.values() {
        for b in y.values() {
            p /= one() - a * b;
        }
    }
    p
}

/// `∏_{x, y} (1 + xy)`.
pub fn dual_cauchy_product(x: &VarSet, y: &VarSet) -> Complex64 {
    let mut p = one();
    for a in x.values() {
        for b in y.values() {
            p *= one() + a * b;
        }
    }
    p
}

/// `Σ_{|λ| <= max_size} s_λ(X) s_λ(Y)`.
pub fn cauchy_sum(x: &VarSet, y: &VarSet, max_size: usize) -> Result<Complex64, SymError> {
    let len = x.len().min(y.len());
    let mut total = Complex64::new(0.0, 0.0);
    for size in 0..=max_size {
        for lam in partitions_bounded(size, len, size) {
            total += schur_det(&lam, x)? * schur_det(&lam, y)?;
        }
    }
    Ok(total)
}

/// `Σ_{|λ| <= max_size} z_λ^{-1} p_λ(X) p_λ(Y)`.
pub fn power_cauchy_sum(x: &VarSet, y: &VarSet, max_size: usize) -> Complex64 {
    let px: Vec<Complex64> = (0..=max_size).map(|k| crate::power_sum(k, x)).collect();
    let py: Vec<Complex64> = (0..=max_size).map(|k| crate::power_sum(k, y)).collect();
    partitions_up_to(max_size)
        .iter()
        .map(|lam| lam.parts().iter().map(|&k| px[k] * py[k]).product::<Complex64>() / lam.z_f64())
        .sum()
}

/// `Σ_λ s_λ(X) s_{λ'}(Y)`, a finite sum.
pub fn dual_cauchy_sum(x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    let mut total = Complex64::new(0.0, 0.0);
    for lam in partitions_in_box(y.len(), x.len()) {
        total += schur_det(&lam, x)? * schur_det(&lam.conjugate(), y)?;
    }
    Ok(total)
}

/// Right side of the generalized Cauchy identity for
/// `Σ_λ LS_λ(S; U) LS_λ(T; V)`.
pub fn generalized_cauchy_product(s: &VarSet, t: &VarSet, u: &VarSet, v: &VarSet) -> Complex64 {
    dual_cauchy_product(s, v) * cauchy_product(s, t) * cauchy_product(u, v) * dual_cauchy_product(u, t)
}

/// `Σ_{|λ| <= max_size} LS_λ(S; U) LS_λ(T; V)`.
pub fn generalized_cauchy_sum(
    s: &VarSet,
    t: &VarSet,
    u: &VarSet,
    v: &VarSet,
    max_size: usize,
) -> Result<Complex64, SymError> {
    let mut total = Complex64::new(0.0, 0.0);
    for lam in partitions_up_to(max_size) {
        let a = ls_eval(&lam, s, u)?;
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        total += a * ls_eval(&lam, t, v)?;
    }
    Ok(total)
}

/// Cauchy, power-sum Cauchy, dual Cauchy and generalized Cauchy checks on
/// random small alphabets.
pub fn cauchy_suite(seed: u64, instances: usize) -> Result<Vec<VerificationReport>, SymError> {
    let mut errs = vec![Vec::new(); 4];
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let nx = 1 + (i % 2) as usize;
        let ny = 1 + ((i / 2) % 2) as usize;
        let x = separated_points(&mut rng, nx, 0.1, 0.6, 0.05, &VarSet::empty());
        let y = separated_points(&mut rng, ny, 0.1, 0.6, 0.05, &VarSet::empty());
        let prod = cauchy_product(&x, &y);
        errs[0].push(rel_err(cauchy_sum(&x, &y, 40)?, prod));
        errs[1].push(rel_err(power_cauchy_sum(&x, &y, 30), prod));
        let bx = separated_points(&mut rng, nx + 1, 0.3, 1.5, 0.05, &VarSet::empty());
        let by = separated_points(&mut rng, ny + 1, 0.3, 1.5, 0.05, &VarSet::empty());
        errs[2].push(rel_err(dual_cauchy_sum(&bx, &by)?, dual_cauchy_product(&bx, &by)));
        let (a, b) = (nx, ny);
        let pts = separated_points(&mut rng, 2 * (a + b), 0.05, 0.4, 0.02, &VarSet::empty());
        let take = |from: usize, len: usize| pts.pick(&(from..from + len).collect::<Vec<_>>());
        let (s, t, u, v) = (take(0, a), take(a, a), take(2 * a, b), take(2 * a + b, b));
        let lhs = generalized_cauchy_sum(&s, &t, &u, &v, 24)?;
        errs[3].push(rel_err(lhs, generalized_cauchy_product(&s, &t, &u, &v)));
    }
    let tols = [1e-8, 1e-8, 1e-10, 1e-6];
    let names = ["cauchy", "cauchy-powersum", "dual-cauchy", "generalized-cauchy"];
    Ok(names
        .iter()
        .zip(errs)
        .zip(tols)
        .map(|((name, e), tol)| VerificationReport::new(name, seed, instances, worst(e), tol))
        .collect())
}
