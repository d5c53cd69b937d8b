use overlap_identities::suites::{
    complement_suite, dual_cauchy_suite, fiber_cardinality, first_overlap_suite, second_overlap_suite,
    subpartition_suite, DEFAULT_POINTS,
};
use overlap_identities::{first_overlap_rhs, identity_sort_split, ls_neg, schur_first_overlap_rhs, second_overlap_rhs};
use partition_core::{mn_index, overlap, OverlapOutcome, Partition};
use proptest::prelude::*;
use symfunc_numeric::{ls_comb, rel_err, schur_det, Complex64, VarSet};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn pts(seed: u64, n: usize) -> VarSet {
    VarSet::new((0..n).map(|i| Complex64::from_polar(0.4 + 0.27 * i as f64, 1.1 * seed as f64 + 2.3 * i as f64)).collect())
}

#[test]
fn full_scale_suites() {
    let reports = [
        first_overlap_suite(2024, 200, DEFAULT_POINTS).unwrap(),
        second_overlap_suite(2024, 200, DEFAULT_POINTS).unwrap(),
        fiber_cardinality(7, 4).unwrap(),
        dual_cauchy_suite(2024, 200).unwrap(),
        subpartition_suite(2024).unwrap(),
        complement_suite(2024).unwrap(),
    ];
    for r in reports {
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn identity_sort_within_index_bound() {
    let lam = p(&[3, 3, 1]);
    let (x, y) = (pts(1, 3), pts(2, 2).scale(Complex64::new(0.0, 1.0)));
    let k = mn_index(&lam, 2, 3);
    assert!(1 <= 3 - k);
    let direct = ls_comb(&lam, &x.neg(), &y).unwrap();
    assert!(rel_err(identity_sort_split(&lam, 1, &x, &y).unwrap(), direct) < 1e-9);
}

#[test]
fn negative_index_vanishes() {
    let lam = p(&[3, 3, 3, 3]);
    let (x, y) = (pts(3, 2), pts(4, 1).scale(Complex64::new(-1.0, 0.0)));
    assert!(mn_index(&lam, 1, 2) < 0);
    assert_eq!(second_overlap_rhs(&lam, &x.pick(&[0]), &x.pick(&[1]), &y).unwrap(), Complex64::new(0.0, 0.0));
    assert!(ls_comb(&lam, &x.neg(), &y).unwrap().norm() < 1e-12);
}

#[test]
fn schur_second_specialization() {
    let x = pts(5, 4);
    let lam = p(&[2, 1]);
    let v = second_overlap_rhs(&lam, &x.pick(&[0, 1]), &x.pick(&[2, 3]), &VarSet::empty()).unwrap();
    let sign = if lam.size() % 2 == 0 { 1.0 } else { -1.0 };
    assert!(rel_err(v, schur_det(&lam, &x).unwrap() * sign) < 1e-10);
}

#[test]
fn degenerate_l_zero() {
    let (x, y) = (pts(6, 3), pts(7, 2).scale(Complex64::new(0.5, 0.5)));
    let lam = p(&[4, 2, 1]);
    let k = mn_index(&lam, 2, 3) as usize;
    let head = lam.prefix(3 - k);
    let v = first_overlap_rhs(&Partition::empty(), &head, 0, &lam.suffix_from(4 - k), &x, &y).unwrap();
    assert!(rel_err(v, ls_neg(&lam, &x, &y).unwrap()) < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_first_specialization(a in prop::collection::vec(0usize..4, 2), b in prop::collection::vec(0usize..4, 2),
                                   m in 1usize..=2, n in 1usize..=2, seed in 0u64..1000) {
        let mut a = a; a.truncate(m); a.sort_unstable_by(|x, y| y.cmp(x));
        let mut b = b; b.truncate(n); b.sort_unstable_by(|x, y| y.cmp(x));
        let (mu, nu) = (Partition::new(a).unwrap(), Partition::new(b).unwrap());
        let x = pts(seed, m + n);
        let (o, v) = schur_first_overlap_rhs(&mu, &nu, m, &x).unwrap();
        match &o {
            OverlapOutcome::Finite { partition, .. } => prop_assert!(rel_err(v, schur_det(partition, &x).unwrap()) < 1e-9),
            OverlapOutcome::Infinite => prop_assert!(v.norm() < 1e-9),
        }
        prop_assert_eq!(o.clone(), overlap(&mu, &nu, m, n).unwrap());
    }
}
