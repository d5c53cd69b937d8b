use num_bigint::BigInt;
use num_rational::BigRational;
use partition_core::{partitions_of, Partition};
use proptest::prelude::*;
use schur_algebra::{
    mn_derive, mn_multiply, powersum_inner, powersum_reduce, powersum_to_schur, schur_to_powersum, PowerSumExpansion,
    SchurExpansion,
};
use symfunc_numeric::{rel_err, schur_det, Complex64, VarSet};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn partition_of_size(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn powersum_combo() -> impl Strategy<Value = PowerSumExpansion> {
    prop::collection::vec((partition_of_size(5), -5i64..=5), 1..4).prop_map(|terms| {
        let mut e = PowerSumExpansion::zero();
        for (p, c) in terms {
            e.add_term(p, q(c));
        }
        e
    })
}

#[test]
fn column_orthogonality_of_characters() {
    for n in 1..=6 {
        let lams = partitions_of(n);
        let chars: Vec<PowerSumExpansion> =
            lams.iter().map(|l| schur_to_powersum(&SchurExpansion::basis(l.clone()))).collect();
        for rho in &lams {
            for sigma in &lams {
                let total = chars
                    .iter()
                    .map(|c| c.coeff(rho) * rho.z_stat() * c.coeff(sigma) * sigma.z_stat())
                    .fold(q(0), |a, b| a + b);
                let want = if rho == sigma { rho.z_stat() } else { q(0) };
                assert_eq!(total, want);
            }
        }
    }
}

#[test]
fn powersum_expansion_evaluates_like_bialternant() {
    let x = VarSet::new(vec![Complex64::new(0.6, 0.2), Complex64::new(-0.3, 0.8), Complex64::new(1.2, -0.4)]);
    for n in 0..=7 {
        for lam in partitions_of(n) {
            let ps = schur_to_powersum(&SchurExpansion::basis(lam.clone()));
            assert!(rel_err(ps.evaluate(&x).unwrap(), schur_det(&lam, &x).unwrap()) < 1e-10, "{lam}");
        }
    }
}

proptest! {
    #[test]
    fn commutation_in_powersums(f in powersum_combo(), k in 1usize..5, l in 1usize..5) {
        let lhs = f.multiply_p(l).derive_p(k).minus(&f.derive_p(k).multiply_p(l));
        let want = if k == l { f.clone() } else { PowerSumExpansion::zero() };
        prop_assert_eq!(lhs, want);
    }

    #[test]
    fn adjointness_in_powersums(f in powersum_combo(), g in powersum_combo(), k in 1usize..5) {
        let lhs = powersum_inner(&f.derive_p(k).scale(&q(k as i64)), &g);
        let rhs = powersum_inner(&f, &g.multiply_p(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operators_agree_across_bases(lam in partition_of_size(5), k in 1usize..5) {
        let s = SchurExpansion::basis(lam);
        let ps = schur_to_powersum(&s);
        prop_assert_eq!(schur_to_powersum(&mn_multiply(k, &s)), ps.multiply_p(k));
        prop_assert_eq!(schur_to_powersum(&mn_derive(k, &s)), ps.derive_p(k).scale(&q(k as i64)));
        prop_assert_eq!(powersum_to_schur(&ps), s);
    }

    #[test]
    fn reduce_matches_iterated_derivative(mu in partition_of_size(3), nu in partition_of_size(6)) {
        let mut f = PowerSumExpansion::basis(nu.clone());
        for &k in mu.parts() {
            f = f.derive_p(k);
        }
        match powersum_reduce(&mu, &nu) {
            Some((c, rest)) => prop_assert_eq!(f, PowerSumExpansion::term(rest, c)),
            None => prop_assert!(f.is_zero()),
        }
    }
}
