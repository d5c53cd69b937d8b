//! Seeded randomized suites for the overlap identities.

use partition_core::{mn_index, overlap_fiber, partitions_in_box, Partition, StaircaseWalk};
use rand::Rng;
use symfunc_numeric::sampling::{instance_rng, random_partition, separated_points};
use symfunc_numeric::suites::dual_cauchy_product;
use symfunc_numeric::{ls_comb, rel_err, schur, Complex64, VarSet, VerificationReport};

use crate::identities::{
    complement_schur_check, dual_cauchy_via_overlap, first_overlap_rhs, overlap_fiber_by_subsets,
    schur_second_overlap_subpartitions, second_overlap_rhs, OverlapError,
};

/// Relative tolerance for the overlap identity suites.
pub const OVERLAP_TOL: f64 = 1e-7;
/// Relative tolerance for the dual Cauchy specialization.
pub const DUAL_CAUCHY_TOL: f64 = 1e-10;
/// Default number of point sets drawn per instance.
pub const DEFAULT_POINTS: usize = 5;

const RMIN: f64 = 0.3;
const RMAX: f64 = 1.5;
const MIN_SEP: f64 = 0.1;
const MAX_SIZE: usize = 10;

struct Shape {
    lambda: Partition,
    n: usize,
    m: usize,
    k: i64,
}

fn random_shape<R: Rng>(rng: &mut R) -> Shape {
    let n = rng.random_range(1..=4);
    let m = rng.random_range(0..=3);
    let lambda = random_partition(rng, MAX_SIZE, n + m + 1, MAX_SIZE);
    let k = mn_index(&lambda, m, n);
    Shape { lambda, n, m, k }
}

fn points<R: Rng>(rng: &mut R, n: usize, m: usize) -> (VarSet, VarSet) {
    let x = separated_points(rng, n, RMIN, RMAX, MIN_SEP, &VarSet::empty());
    let y = separated_points(rng, m, RMIN, RMAX, MIN_SEP, &x);
    (x, y)
}

/// First overlap identity on random instances: a random fiber pair of
/// `λ_{[n-k]}` is fed to [`first_overlap_rhs`] and compared with the
/// tableau evaluation of `LS_λ(-X; Y)`.
pub fn first_overlap_suite(seed: u64, instances: usize, per_instance: usize) -> Result<VerificationReport, OverlapError> {
    let mut worst = 0.0f64;
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let sh = random_shape(&mut rng);
        let lam = &sh.lambda;
        let (l, entry, tail) = if sh.k < 0 {
            (0, None, Partition::empty())
        } else {
            let k = sh.k as usize;
            let l = rng.random_range(0..=sh.n - k);
            let fiber = overlap_fiber(&lam.prefix(sh.n - k), l, sh.n - k - l)?;
            let e = fiber[rng.random_range(0..fiber.len())].clone();
            (l, Some(e), lam.suffix_from(sh.n - k + 1))
        };
        for _ in 0..per_instance {
            let (x, y) = points(&mut rng, sh.n, sh.m);
            let lhs = ls_comb(lam, &x.neg(), &y)?;
            let rhs = match &entry {
                Some(e) => first_overlap_rhs(&e.mu, &e.nu, l, &tail, &x, &y)?,
                None => Complex64::new(0.0, 0.0),
            };
            worst = worst.max(rel_err(lhs, rhs));
        }
    }
    Ok(VerificationReport::new("overlap-first", seed, instances, worst, OVERLAP_TOL))
}

/// Second overlap identity on random instances, against the tableau
/// evaluation of `LS_λ(-(S ∪ T); Y)`.
pub fn second_overlap_suite(seed: u64, instances: usize, per_instance: usize) -> Result<VerificationReport, OverlapError> {
    let mut worst = 0.0f64;
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let sh = random_shape(&mut rng);
        let l = if sh.k < 0 { rng.random_range(0..=sh.n) } else { rng.random_range(0..=sh.n - sh.k as usize) };
        for _ in 0..per_instance {
            let (x, y) = points(&mut rng, sh.n, sh.m);
            let (s, t) = (x.pick(&(0..l).collect::<Vec<_>>()), x.pick(&(l..sh.n).collect::<Vec<_>>()));
            let lhs = ls_comb(&sh.lambda, &x.neg(), &y)?;
            let rhs = second_overlap_rhs(&sh.lambda, &s, &t, &y)?;
            worst = worst.max(rel_err(lhs, rhs));
        }
    }
    Ok(VerificationReport::new("overlap-second", seed, instances, worst, OVERLAP_TOL))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exhaustive check that `overlap_fiber(λ, m, n)` has `C(m + n, m)` entries
/// and matches the subset enumeration, for every `λ` of length at most
/// `m + n` inside a box of width `max_part` and all `m + n <= max_total`.
pub fn fiber_cardinality(max_total: usize, max_part: usize) -> Result<VerificationReport, OverlapError> {
    let mut cases = 0;
    let mut bad = 0usize;
    for total in 0..=max_total {
        for lam in partitions_in_box(max_part, total) {
            for m in 0..=total {
                let fiber = overlap_fiber(&lam, m, total - m)?;
                let as_set = fiber.iter().map(|e| (e.mu.clone(), e.nu.clone(), e.sign)).collect();
                if fiber.len() != binomial(total, m) || overlap_fiber_by_subsets(&lam, m, total - m) != as_set {
                    bad += 1;
                }
                cases += 1;
            }
        }
    }
    Ok(VerificationReport::new("overlap-fiber-cardinality", 0, cases, bad as f64, 0.0))
}

/// The dual Cauchy product recovered from the empty-partition walk sum.
pub fn dual_cauchy_suite(seed: u64, instances: usize) -> Result<VerificationReport, OverlapError> {
    let mut worst = 0.0f64;
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let n = rng.random_range(1..=4);
        let m = rng.random_range(0..=3);
        let (x, y) = points(&mut rng, n, m);
        worst = worst.max(rel_err(dual_cauchy_via_overlap(&x, &y)?, dual_cauchy_product(&x, &y)));
    }
    Ok(VerificationReport::new("overlap-dual-cauchy", seed, instances, worst, DUAL_CAUCHY_TOL))
}

/// The subpartition-indexed Schur form against direct evaluation,
/// exhaustively for `|S|, |T|, l <= 2`.
pub fn subpartition_suite(seed: u64) -> Result<VerificationReport, OverlapError> {
    let mut rng = instance_rng(seed, 0);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for m in 0..=2 {
        for n in 0..=2 {
            for l in 0..=2 {
                let (s, t) = points(&mut rng, m, n);
                for kappa in partitions_in_box(m + n, l) {
                    let direct = schur(&kappa.conjugate(), &s.concat(&t))?;
                    worst = worst.max(rel_err(schur_second_overlap_subpartitions(&kappa, l, &s, &t)?, direct));
                    cases += 1;
                }
            }
        }
    }
    Ok(VerificationReport::new("overlap-subpartitions", seed, cases, worst, OVERLAP_TOL))
}

/// Schur functions indexed by complements, every `λ ⊂ ⟨m^n⟩` with
/// `m, n <= 3`.
pub fn complement_suite(seed: u64) -> Result<VerificationReport, OverlapError> {
    let mut rng = instance_rng(seed, 0);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 1..=3 {
        for m in 0..=3 {
            let (x, _) = points(&mut rng, n, 0);
            for lam in partitions_in_box(m, n) {
                let (a, b) = complement_schur_check(&lam, m, &x)?;
                worst = worst.max(rel_err(a, b));
                cases += 1;
            }
        }
    }
    Ok(VerificationReport::new("overlap-complement", seed, cases, worst, 1e-10))
}

/// Number of walks in `𝔓(n, m)`.
pub fn walk_count(n: usize, m: usize) -> usize {
    StaircaseWalk::all(n, m).len()
}
