//! Randomized checks of the Murnaghan-Nakayama family of rules.

use num_bigint::BigInt;
use num_rational::BigRational;
use partition_core::{partitions_up_to, Partition};
use symfunc_numeric::sampling::{instance_rng, random_partition, separated_points};
use rand::Rng;
use symfunc_numeric::{power_sum, rel_err, SymError, VarSet, VerificationReport};

use crate::negative::RULE_TOL;
use crate::{hall_inner, ls_mn_sides, mn_derive, mn_multiply, mn_negative, mn_negative_composite, SchurExpansion};

fn random_expansion<R: Rng>(rng: &mut R, size: usize) -> SchurExpansion {
    let all = partition_core::partitions_of(size);
    let mut f = SchurExpansion::zero();
    for _ in 0..3 {
        let lam = all[rng.random_range(0..all.len())].clone();
        let c = BigRational::new(BigInt::from(rng.random_range(-9i64..=9)), BigInt::from(rng.random_range(1i64..=5)));
        f.add_term(lam, c);
    }
    f
}

fn exact_err(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

/// Adjointness, commutation, the multiplication rule, the negative rule and
/// its composite form, and the rule for Littlewood-Schur functions.
pub fn mn_all(seed: u64, instances: usize) -> Result<Vec<VerificationReport>, SymError> {
    let mut errs: Vec<Vec<f64>> = vec![Vec::new(); 6];
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let k = rng.random_range(1..=4usize);
        let l = rng.random_range(1..=4usize);
        let d = rng.random_range(0..=5usize);
        let f = random_expansion(&mut rng, d + k);
        let g = random_expansion(&mut rng, d);
        errs[0].push(exact_err(hall_inner(&mn_derive(k, &f), &g) == hall_inner(&f, &mn_multiply(k, &g))));

        let lhs = mn_derive(k, &mn_multiply(l, &g)).minus(&mn_multiply(l, &mn_derive(k, &g)));
        let want = if k == l { g.scale(&BigRational::from_integer(BigInt::from(k))) } else { SchurExpansion::zero() };
        errs[1].push(exact_err(lhs == want));

        let nx = rng.random_range(1..=4usize);
        let x = separated_points(&mut rng, nx, 0.3, 1.5, 0.05, &VarSet::empty());
        let prod = mn_multiply(k, &g).evaluate(&x)?;
        errs[2].push(rel_err(prod, g.evaluate(&x)? * power_sum(k, &x)));

        let n = rng.random_range(1..=3usize);
        let xn = separated_points(&mut rng, n, 0.3, 1.5, 0.05, &VarSet::empty());
        let tail = random_partition(&mut rng, 4, n, 4);
        let mu = Partition::rectangle(rng.random_range(1..=4usize), n).add(&tail);
        let kk = rng.random_range(1..=mu.part(n));
        errs[3].push(match mn_negative(&mu, kk, &xn) {
            Ok(_) => 0.0,
            Err(crate::AlgebraError::Mismatch { lhs, rhs }) => rel_err(lhs, rhs),
            Err(_) => f64::INFINITY,
        });
        let lam = random_partition(&mut rng, mu.part(n), 3, mu.part(n));
        errs[4].push(match mn_negative_composite(&mu, &lam, &xn) {
            Ok(_) => 0.0,
            Err(crate::AlgebraError::Mismatch { lhs, rhs }) => rel_err(lhs, rhs),
            Err(_) => f64::INFINITY,
        });
    }
    let mut rng = instance_rng(seed, u64::MAX);
    let mut ls_count = 0;
    for mu in partitions_up_to(6) {
        for k in 1..=4 {
            let x = separated_points(&mut rng, 2, 0.3, 1.5, 0.05, &VarSet::empty());
            let y = separated_points(&mut rng, 2, 0.3, 1.5, 0.05, &x.neg());
            let (a, b) = ls_mn_sides(&mu, k, &x, &y)?;
            errs[5].push(rel_err(a, b));
            ls_count += 1;
        }
    }
    let worst = |e: &Vec<f64>| e.iter().copied().fold(0.0, f64::max);
    Ok(vec![
        VerificationReport::new("mn-adjointness", seed, instances, worst(&errs[0]), 0.0),
        VerificationReport::new("mn-commutation", seed, instances, worst(&errs[1]), 0.0),
        VerificationReport::new("mn-multiply", seed, instances, worst(&errs[2]), RULE_TOL),
        VerificationReport::new("mn-negative", seed, instances, worst(&errs[3]), RULE_TOL),
        VerificationReport::new("mn-negative-composite", seed, instances, worst(&errs[4]), RULE_TOL),
        VerificationReport::new("mn-littlewood-schur", seed, ls_count, worst(&errs[5]), RULE_TOL),
    ])
}
