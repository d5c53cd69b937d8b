use haar_harness::{mc_average, sample_haar, weyl_quadrature, Estimator, UnitarySample};
use num_complex::Complex64;
use partition_core::partitions_up_to;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symfunc_numeric::{schur_comb, VarSet};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn trace_moments() {
    let t = mc_average(&Estimator::Trace, 5, 100_000, 1, 4).unwrap();
    assert!(t.z_score(c(0.0)) < 4.0, "{t:?}");
    let t2 = mc_average(&Estimator::AbsTraceSq, 5, 100_000, 2, 4).unwrap();
    assert!(t2.z_score(c(1.0)) < 4.0, "{t2:?}");
    let a = mc_average(&Estimator::AbsCharSq { z: 1.0 }, 3, 100_000, 42, 4).unwrap();
    assert!(a.z_score(c(4.0)) < 4.0, "{a:?}");
}

#[test]
fn eigenangles_are_uniform() {
    let bins = 16;
    let m = 100_000;
    let n = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = vec![0f64; bins];
    for _ in 0..m {
        let s = haar_harness::sample_haar_with(&mut rng, n).unwrap();
        for r in &s.eigenvalues {
            let t = r.arg().rem_euclid(std::f64::consts::TAU);
            counts[((t / std::f64::consts::TAU * bins as f64) as usize).min(bins - 1)] += 1.0;
        }
    }
    let p = 1.0 / bins as f64;
    for k in counts {
        let frac = k / (m * n) as f64;
        let sigma = (p * (1.0 - p) / m as f64).sqrt();
        assert!((frac - p).abs() < 4.0 * sigma, "bin fraction {frac}");
    }
}

#[test]
fn results_do_not_depend_on_workers() {
    let e = Estimator::LogderPair { eps: 0.3, phi: 0.3 };
    let a = mc_average(&e, 6, 3000, 17, 1).unwrap();
    let b = mc_average(&e, 6, 3000, 17, 3).unwrap();
    let d = mc_average(&e, 6, 3000, 17, 8).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, d);
    assert_eq!(sample_haar(4, 3).unwrap(), sample_haar(4, 3).unwrap());
}

#[test]
fn paired_log_derivative() {
    let (eps, phi) = (0.3f64, 0.3f64);
    let want = eps * phi / (1.0 - eps * phi).powi(2);
    let e = mc_average(&Estimator::LogderPair { eps, phi }, 20, 30_000, 8, 4).unwrap();
    assert!(e.z_score(c(want)) < 4.0, "{e:?} vs {want}");
    assert_eq!(e.rejected, 0);
}

#[test]
fn ratio_matches_main_term() {
    let a = VarSet::new(vec![Complex64::new(0.3, 0.1)]);
    let b = VarSet::new(vec![Complex64::new(0.2, -0.2)]);
    let cc = VarSet::new(vec![Complex64::new(0.4, 0.0)]);
    let d = VarSet::new(vec![Complex64::new(-0.1, 0.3)]);
    let want = rmt_formulas::ratio_avg(&a, &b, &cc, &d, 6).unwrap();
    let est = Estimator::Ratio {
        alpha: a.values()[0],
        beta: b.values()[0],
        gamma: cc.values()[0],
        delta: d.values()[0],
    };
    let e = mc_average(&est, 6, 30_000, 4, 4).unwrap();
    assert!(e.z_score(want) < 4.0, "{e:?} vs {want}");
}

#[test]
fn eigenvalue_sum_against_explicit_formula() {
    use rmt_formulas::{explicit_formula_rhs, ExplicitOptions, SymTestFunction, TestFunction};
    let rhs = explicit_formula_rhs(&TestFunction::Rational(2.0), &SymTestFunction::Constant(1.0), 1, 0.9, 8, &ExplicitOptions::default())
        .unwrap();
    let e = mc_average(&Estimator::EigenSumRational { c: 2.0 }, 8, 30_000, 6, 4).unwrap();
    assert!(e.z_score(rhs.value) < 4.0, "{e:?} vs {:?}", rhs.value);
}

#[test]
fn schur_orthogonality_by_quadrature() {
    for n in 1..=3usize {
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                let f = |z: &[Complex64]| {
                    let x = VarSet::new(z.to_vec());
                    schur_comb(&mu, &x).unwrap() * schur_comb(&nu, &x).unwrap().conj()
                };
                let got = weyl_quadrature(f, n, 8).unwrap();
                let want = if mu == nu && mu.len() <= n { 1.0 } else { 0.0 };
                assert!((got - want).norm() < 1e-6, "N={n} {mu:?} {nu:?} {got}");
            }
        }
    }
}

#[test]
fn completed_functional_equation_holds_on_samples() {
    for seed in 0..20 {
        let s: UnitarySample = sample_haar(5, seed).unwrap();
        let z = Complex64::new(0.4, 0.3);
        let lhs = s.completed_log_deriv(z).unwrap();
        let rhs = s.inverse().completed_log_deriv(z.inv()).unwrap();
        assert!((lhs + rhs).norm() < 1e-10);
    }
}
