use std::collections::BTreeSet;

use partition_core::{
    c_seq, complement, increasing_subsets, mn_index, overlap, overlap_fiber, parity_sign, partitions_in_box,
    sub_partition, OverlapOutcome, Partition, PartitionError, StaircaseWalk,
};
use symfunc_numeric::{delta2, e_prod, ls_comb, ls_det, schur, Complex64, SymError, VarSet};
use thiserror::Error;

/// Errors raised by overlap identity evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OverlapError {
    /// Input violates a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Invalid partition input.
    #[error(transparent)]
    Partition(#[from] PartitionError),
    /// Numeric evaluation failed.
    #[error(transparent)]
    Sym(#[from] SymError),
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// `LS_λ(-X; Y)`, by determinant when `X ∪ Y` is separated and by tableaux
/// otherwise.
pub fn ls_neg(lambda: &Partition, x: &VarSet, y: &VarSet) -> Result<Complex64, SymError> {
    match ls_det(lambda, x, y) {
        Err(SymError::IllConditioned { .. }) => ls_comb(lambda, &x.neg(), y),
        r => r,
    }
}

fn check_distinct(x: &VarSet, what: &str) -> Result<(), OverlapError> {
    if x.min_separation() == 0.0 {
        return Err(OverlapError::Precondition(format!("{what} must consist of pairwise distinct variables")));
    }
    Ok(())
}

/// The right side `ν ∪ λ_tail` of the first identity and its index `k`.
fn full_right(nu: &Partition, tail: &Partition, m: usize, n: usize, l: usize) -> (Partition, i64) {
    let full = nu.union(tail);
    let k = mn_index(&full, m, n - l);
    (full, k)
}

/// Right side of the first overlap identity,
/// `Σ_{S ∪ T = X} ε(μ, ν) LS_{μ + ⟨k^l⟩}(-S; Y) LS_{ν ∪ λ_tail}(-T; Y) / Δ(T; S)`,
/// with `|S| = l` and `k` the `(|Y|, |X| - l)`-index of `ν ∪ λ_tail`.
///
/// The overlap is `μ ⋆_{l, n-l-k} (ν ∪ λ_tail)_{[n-l-k]}`; when it is
/// infinite or `k < 0` the value is 0.
pub fn first_overlap_rhs(
    mu: &Partition,
    nu: &Partition,
    l: usize,
    lambda_tail: &Partition,
    x: &VarSet,
    y: &VarSet,
) -> Result<Complex64, OverlapError> {
    let (n, m) = (x.len(), y.len());
    check_distinct(x, "X")?;
    if l > n || mu.len() > l {
        return Err(OverlapError::Precondition(format!("need l(μ) <= l <= |X|, got l(μ) = {}, l = {l}", mu.len())));
    }
    let (full, k) = full_right(nu, lambda_tail, m, n, l);
    if k < 0 {
        return Ok(zero());
    }
    let k = k as usize;
    if l + k > n {
        return Err(OverlapError::Precondition(format!("need l <= n - k, got l = {l}, n = {n}, k = {k}")));
    }
    let left = mu.add_rect(k, l);
    if mn_index(&left, m, l) != 0 && l > 0 && m > 0 {
        return Err(OverlapError::Precondition(format!("({m}, {l})-index of {left} must be 0")));
    }
    let head = full.prefix(n - l - k);
    let sign = match overlap(mu, &head, l, n - l - k)? {
        OverlapOutcome::Infinite => return Ok(zero()),
        OverlapOutcome::Finite { sign, .. } => sign,
    };
    Ok(first_overlap_unsigned_sum(&left, &full, l, x, y)? * sign as f64)
}

/// `Σ_{S ∪ T = X, |S| = l} LS_α(-S; Y) LS_β(-T; Y) / Δ(T; S)`.
pub fn first_overlap_unsigned_sum(
    alpha: &Partition,
    beta: &Partition,
    l: usize,
    x: &VarSet,
    y: &VarSet,
) -> Result<Complex64, OverlapError> {
    let mut total = zero();
    for (s, t) in x.splits(l) {
        let a = ls_neg(alpha, &s, y)?;
        if a == zero() {
            continue;
        }
        total += a * ls_neg(beta, &t, y)? / delta2(&t, &s);
    }
    Ok(total)
}

/// Left side of the first overlap identity: the assembled partition
/// `(μ ⋆ (ν ∪ λ_tail)_{[n-l-k]}) ∪ (ν ∪ λ_tail)_{(n+1-l-k, ...)}` and
/// `LS_λ(-X; Y)`, or `None` with value 0 when the overlap is infinite.
pub fn first_overlap_lhs(
    mu: &Partition,
    nu: &Partition,
    l: usize,
    lambda_tail: &Partition,
    x: &VarSet,
    y: &VarSet,
) -> Result<(Option<Partition>, Complex64), OverlapError> {
    let (n, m) = (x.len(), y.len());
    let (full, k) = full_right(nu, lambda_tail, m, n, l);
    if k < 0 {
        return Ok((None, zero()));
    }
    let k = k as usize;
    if l + k > n {
        return Err(OverlapError::Precondition(format!("need l <= n - k, got l = {l}, n = {n}, k = {k}")));
    }
    let head = full.prefix(n - l - k);
    match overlap(mu, &head, l, n - l - k)? {
        OverlapOutcome::Infinite => Ok((None, zero())),
        OverlapOutcome::Finite { partition, .. } => {
            let lam = partition.concat_padded(n - k, &full.suffix_from(n - l - k + 1))?;
            let v = ls_neg(&lam, x, y)?;
            Ok((Some(lam), v))
        }
    }
}

/// The first identity with the sort taken to be the identity:
/// `Σ LS_{λ_{[l]} + ⟨(n-l)^l⟩}(-S; Y) LS_{λ_{(l+1, ...)}}(-T; Y) / Δ(T; S)`.
///
/// This agrees with `LS_λ(-X; Y)` when `l <= n - k` but not in general.
pub fn identity_sort_split(lambda: &Partition, l: usize, x: &VarSet, y: &VarSet) -> Result<Complex64, OverlapError> {
    let n = x.len();
    if l > n {
        return Err(OverlapError::Precondition(format!("need l <= |X|, got l = {l}")));
    }
    let left = lambda.prefix(l).add_rect(n - l, l);
    first_overlap_unsigned_sum(&left, &lambda.suffix_from(l + 1), l, x, y)
}

/// Right side of the second overlap identity for `LS_λ(-(S ∪ T); Y)`.
pub fn second_overlap_rhs(lambda: &Partition, s: &VarSet, t: &VarSet, y: &VarSet) -> Result<Complex64, OverlapError> {
    let l = s.len();
    let n = l + t.len();
    let m = y.len();
    check_distinct(y, "Y")?;
    if delta2(s, t) == zero() {
        return Err(OverlapError::Precondition("S and T must be disjoint".into()));
    }
    let k = mn_index(lambda, m, n);
    if k < 0 {
        return Ok(zero());
    }
    let k = k as usize;
    if l > n - k {
        return Err(OverlapError::Precondition(format!("need |S| <= n - k, got |S| = {l}, n = {n}, k = {k}")));
    }
    let head = lambda.prefix(n - k);
    let tail = lambda.suffix_from(n - k + 1);
    let mut total = zero();
    for p in 0..=l.min(m) {
        let fiber = overlap_fiber(&head, l - p, n - k - l + p)?;
        for (u, v) in y.splits(p) {
            let pref = delta2(&v, s) * delta2(t, &u) / (delta2(&v, &u) * delta2(t, s));
            for e in &fiber {
                let left = e.mu.sub_rect(m - k, l - p).ok_or_else(|| {
                    OverlapError::Precondition(format!("{} does not contain the rectangle", e.mu))
                })?;
                let a = ls_neg(&left, s, &u)?;
                if a == zero() {
                    continue;
                }
                let right = e.nu.concat_padded(n - k - l + p, &tail)?;
                total += pref * a * ls_neg(&right, t, &v)? * e.sign as f64;
            }
        }
    }
    Ok(total)
}

/// Right side of the first overlap identity for Schur functions,
/// `Σ_{S ∪ T = X} ε(μ, ν) s_μ(S) s_ν(T) / Δ(S; T)` with `|S| = m`.
pub fn schur_first_overlap_rhs(
    mu: &Partition,
    nu: &Partition,
    m: usize,
    x: &VarSet,
) -> Result<(OverlapOutcome, Complex64), OverlapError> {
    let n = x.len().checked_sub(m).ok_or_else(|| OverlapError::Precondition("need m <= |X|".into()))?;
    check_distinct(x, "X")?;
    let o = overlap(mu, nu, m, n)?;
    let mut total = zero();
    for (s, t) in x.splits(m) {
        total += schur(mu, &s)? * schur(nu, &t)? / delta2(&s, &t);
    }
    let sign = match &o {
        OverlapOutcome::Finite { sign, .. } => *sign,
        OverlapOutcome::Infinite => 1,
    };
    Ok((o, total * sign as f64))
}

/// `s_λ(S ∪ T) = Σ_{μ ⋆ ν = λ} ε(μ, ν) s_μ(S) s_ν(T) / Δ(S; T)` summed over
/// the labelled walks of `𝔓(|T|, |S|)`.
pub fn schur_second_overlap_fiber(lambda: &Partition, s: &VarSet, t: &VarSet) -> Result<Complex64, OverlapError> {
    let (m, n) = (s.len(), t.len());
    if lambda.len() > m + n {
        return Ok(zero());
    }
    let d = delta2(s, t);
    let mut total = zero();
    for e in overlap_fiber(lambda, m, n)? {
        total += schur(&e.mu, s)? * schur(&e.nu, t)? * e.sign as f64;
    }
    Ok(total / d)
}

/// Pairs `(μ, ν)` with `μ ⋆_{m,n} ν = λ`, found by splitting the entries of
/// `λ + ρ_{m+n}` into two sets.
pub fn overlap_fiber_by_subsets(lambda: &Partition, m: usize, n: usize) -> BTreeSet<(Partition, Partition, i32)> {
    let total = m + n;
    let beta: Vec<usize> = (1..=total).map(|i| lambda.part(i) + total - i).collect();
    let mut out = BTreeSet::new();
    for pick in increasing_subsets(total, m) {
        let rest: Vec<usize> = (1..=total).filter(|i| !pick.contains(i)).collect();
        let shift = |idx: &[usize], len: usize| -> Option<Vec<usize>> {
            idx.iter().enumerate().map(|(i, &j)| beta[j - 1].checked_sub(len - 1 - i)).collect()
        };
        let (Some(a), Some(b)) = (shift(&pick, m), shift(&rest, n)) else { continue };
        let (Ok(mu), Ok(nu)) = (Partition::new(a), Partition::new(b)) else { continue };
        let inversions: usize = pick.iter().map(|&p| rest.iter().filter(|&&r| r < p).count()).sum();
        out.insert((mu, nu, parity_sign(inversions)));
    }
    out
}

/// `s_{κ'}(S ∪ T)` through subpartitions: the sum over `λ ⊂ ⟨m^{n+l}⟩` and
/// `K ⊂ [n + l]` with `sub(λ, K) = κ` of
/// `(-1)^{|λ̃_{C(K)}|} s_{λ'}(S) s_{sub(λ̃, C(K))}(T) / Δ(S; T)`.
pub fn schur_second_overlap_subpartitions(
    kappa: &Partition,
    l: usize,
    s: &VarSet,
    t: &VarSet,
) -> Result<Complex64, OverlapError> {
    let (m, n) = (s.len(), t.len());
    if !kappa.fits_in(m + n, l) {
        return Err(OverlapError::Precondition(format!("{kappa} must fit in ⟨{}^{l}⟩", m + n)));
    }
    let mut total = zero();
    for lam in partitions_in_box(m, n + l) {
        let comp = complement(&lam, m, n + l)?;
        for k in increasing_subsets(n + l, l) {
            if sub_partition(&lam, n + l, &k).as_ref() != Some(kappa) {
                continue;
            }
            let c = c_seq(n + l, &k).expect("valid subsequence");
            let right = sub_partition(&comp, n + l, &c).expect("complement fits");
            let sign = parity_sign(comp.select(&c).iter().sum());
            total += schur(&lam.conjugate(), s)? * schur(&right, t)? * sign as f64;
        }
    }
    Ok(total / delta2(s, t))
}

/// `e(X)^m Σ_{π ∈ 𝔓(m, n)} (-1)^{|ν(π)|} s_{μ(π)}(X^{-1}) s_{ν(π)'}(-Y)` with
/// `|X| = n` and `|Y| = m`, which equals `∏ (1 + xy)`.
pub fn dual_cauchy_via_overlap(x: &VarSet, y: &VarSet) -> Result<Complex64, OverlapError> {
    let (n, m) = (x.len(), y.len());
    let inv = x.inv().ok_or(SymError::ZeroVariable)?;
    let ny = y.neg();
    let mut total = zero();
    for w in StaircaseWalk::all(m, n) {
        let nu = w.nu();
        total += schur(&w.mu(), &inv)? * schur(&nu.conjugate(), &ny)? * parity_sign(nu.size()) as f64;
    }
    Ok(total * e_prod(x).powu(m as u32))
}

/// Both sides of `s_{λ̃}(X) = s_λ(X^{-1}) e(X)^m` for `λ ⊂ ⟨m^n⟩`, `n = |X|`.
pub fn complement_schur_check(lambda: &Partition, m: usize, x: &VarSet) -> Result<(Complex64, Complex64), OverlapError> {
    let comp = complement(lambda, m, x.len())?;
    let inv = x.inv().ok_or(SymError::ZeroVariable)?;
    Ok((schur(&comp, x)?, schur(lambda, &inv)? * e_prod(x).powu(m as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::partitions_up_to;
    use symfunc_numeric::rel_err;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x4() -> VarSet {
        VarSet::new(vec![c(0.5, 0.4), c(-0.9, 0.6), c(1.3, -0.3), c(-0.4, -1.0)])
    }

    fn y3() -> VarSet {
        VarSet::new(vec![c(0.7, -0.8), c(-1.2, -0.1), c(0.2, 1.1)])
    }

    #[test]
    fn surplus_term() {
        let x = x4().pick(&[0, 1]);
        let y = y3();
        let lam = p(&[1, 1, 1]);
        assert_eq!(mn_index(&lam, 3, 2), 2);
        let lhs = ls_neg(&lam, &x, &y).unwrap();
        let naive = identity_sort_split(&lam, 1, &x, &y).unwrap();
        assert!(rel_err(lhs - naive, e_prod(&y)) < 1e-12);
    }

    #[test]
    fn first_identity_from_fibers() {
        let (x, y) = (x4(), y3());
        for lam in partitions_up_to(7) {
            for n in 1..=4 {
                for m in 0..=3 {
                    let xs = x.pick(&(0..n).collect::<Vec<_>>());
                    let ys = y.pick(&(0..m).collect::<Vec<_>>());
                    let k = mn_index(&lam, m, n);
                    if k < 0 || lam.len() > n + m {
                        continue;
                    }
                    let k = k as usize;
                    let head = lam.prefix(n - k);
                    let tail = lam.suffix_from(n - k + 1);
                    let lhs = ls_neg(&lam, &xs, &ys).unwrap();
                    for l in 0..=(n - k) {
                        for e in overlap_fiber(&head, l, n - k - l).unwrap() {
                            let rhs = first_overlap_rhs(&e.mu, &e.nu, l, &tail, &xs, &ys).unwrap();
                            assert!(rel_err(lhs, rhs) < 1e-8, "{lam} n={n} m={m} l={l} {} {}", e.mu, e.nu);
                            let (assembled, v) = first_overlap_lhs(&e.mu, &e.nu, l, &tail, &xs, &ys).unwrap();
                            assert_eq!(assembled, Some(lam.clone()));
                            assert!(rel_err(v, lhs) < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn infinite_overlap_sum_vanishes() {
        let (x, y) = (x4().pick(&[0, 1, 2]), y3().pick(&[0]));
        let mu = p(&[2]);
        let nu = p(&[2, 2]);
        let (full, k) = full_right(&nu, &Partition::empty(), 1, 3, 1);
        assert_eq!(k, 0);
        assert_eq!(overlap(&mu, &full, 1, 2).unwrap(), OverlapOutcome::Infinite);
        let raw = first_overlap_unsigned_sum(&mu.add_rect(0, 1), &full, 1, &x, &y).unwrap();
        let scale = ls_neg(&mu, &x.pick(&[0]), &y).unwrap().norm();
        assert!(raw.norm() < 1e-12 * scale.max(1.0));
        assert_eq!(first_overlap_rhs(&mu, &nu, 1, &Partition::empty(), &x, &y).unwrap(), zero());
    }

    #[test]
    fn second_identity_small() {
        let (x, y) = (x4(), y3());
        for lam in partitions_up_to(6) {
            for n in 1..=4 {
                for m in 0..=3 {
                    let k = mn_index(&lam, m, n);
                    if k < 0 {
                        continue;
                    }
                    let xs = x.pick(&(0..n).collect::<Vec<_>>());
                    let ys = y.pick(&(0..m).collect::<Vec<_>>());
                    let lhs = ls_neg(&lam, &xs, &ys).unwrap();
                    for l in 0..=(n - k as usize) {
                        let (s, t) = (xs.pick(&(0..l).collect::<Vec<_>>()), xs.pick(&(l..n).collect::<Vec<_>>()));
                        let rhs = second_overlap_rhs(&lam, &s, &t, &ys).unwrap();
                        assert!(rel_err(lhs, rhs) < 1e-8, "{lam} n={n} m={m} l={l}: {lhs} {rhs}");
                    }
                }
            }
        }
    }

    #[test]
    fn schur_forms_agree() {
        let x = x4();
        let (s, t) = (x.pick(&[0, 1]), x.pick(&[2, 3]));
        for lam in partitions_up_to(6).into_iter().filter(|l| l.len() <= 4) {
            let direct = schur(&lam, &x).unwrap();
            assert!(rel_err(schur_second_overlap_fiber(&lam, &s, &t).unwrap(), direct) < 1e-10);
            let subsets: BTreeSet<(Partition, Partition, i32)> = overlap_fiber(&lam, 2, 2)
                .unwrap()
                .into_iter()
                .map(|e| (e.mu, e.nu, e.sign))
                .collect();
            assert_eq!(subsets, overlap_fiber_by_subsets(&lam, 2, 2));
        }
        for kappa in partitions_in_box(4, 2) {
            let direct = schur(&kappa.conjugate(), &x).unwrap();
            let v = schur_second_overlap_subpartitions(&kappa, 2, &s, &t).unwrap();
            assert!(rel_err(v, direct) < 1e-10, "{kappa}");
        }
    }

    #[test]
    fn schur_first_example() {
        let x = VarSet::new((0..8).map(|i| Complex64::from_polar(0.6 + 0.1 * i as f64, 0.7 * i as f64)).collect());
        let (o, v) = schur_first_overlap_rhs(&p(&[9, 6, 1]), &p(&[4, 3, 3, 2]), 3, &x).unwrap();
        assert_eq!(o, OverlapOutcome::Finite { partition: p(&[4, 2, 2, 2, 2, 1]), sign: -1 });
        assert!(rel_err(v, schur(&p(&[4, 2, 2, 2, 2, 1]), &x).unwrap()) < 1e-9);
    }

    #[test]
    fn dual_cauchy_and_complement() {
        let (x, y) = (x4().pick(&[0, 1, 2]), y3().pick(&[0, 1]));
        let v = dual_cauchy_via_overlap(&x, &y).unwrap();
        let prod: Complex64 = x.values().iter().flat_map(|a| y.values().iter().map(move |b| 1.0 + a * b)).product();
        assert!(rel_err(v, prod) < 1e-12);
        for lam in partitions_in_box(2, 3) {
            let (a, b) = complement_schur_check(&lam, 2, &x).unwrap();
            assert!(rel_err(a, b) < 1e-12);
        }
    }
}
