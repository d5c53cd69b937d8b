use num_traits::ToPrimitive;
use partition_core::Partition;
use proptest::prelude::*;
use rmt_formulas::{
    completed_logders_main, logders_main, moment_leading, moment_unitary, product_avg, ratio_avg, recipe_main,
    ProductForm, RecipeInput, DEFAULT_MAX_PART,
};
use symfunc_numeric::{delta2, e_prod, rel_err, Complex64, VarSet};

fn hook_content(lambda: &Partition, n: usize) -> f64 {
    let conj = lambda.conjugate();
    let mut v = 1.0;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.part(j + 1) - i - 1) + 1;
            v *= (n as f64 + j as f64 - i as f64) / hook as f64;
        }
    }
    v
}

#[test]
fn moments_count_tableaux() {
    for k in 1..=3 {
        for n in 1..=4 {
            let exact = moment_unitary(k, n).to_f64().unwrap();
            assert_eq!(exact, hook_content(&Partition::rectangle(n, k), 2 * k).round(), "k={k} N={n}");
        }
    }
    assert_eq!(moment_unitary(2, 2).to_f64().unwrap(), 20.0);
}

#[test]
fn moments_approach_leading_term() {
    let dev = |k: usize, n: usize| {
        let ratio = moment_unitary(k, n).to_f64().unwrap() / (n as f64).powi((k * k) as i32);
        ratio / moment_leading(k).to_f64().unwrap() - 1.0
    };
    for k in 1..=3 {
        let (d200, d400, d2000) = (dev(k, 200), dev(k, 400), dev(k, 2000));
        assert!(d200 > d400 && d400 > d2000 && d2000 > 0.0);
        let scaled = d200 * 200.0 / (k * k * k) as f64;
        assert!((0.9..1.15).contains(&scaled), "k={k}: {scaled}");
        assert!(d2000 < 0.02, "k={k}: {d2000}");
    }
    assert!(dev(1, 200) < 0.02);
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn one() -> Complex64 {
    c(1.0, 0.0)
}

#[test]
fn recipe_with_one_log_derivative() {
    let mut inp = RecipeInput::empty(5);
    inp.A = VarSet::new(vec![c(0.5, 0.4), c(-0.6, 0.2)]);
    inp.B = VarSet::new(vec![c(0.7, -0.6)]);
    inp.C = VarSet::new(vec![c(0.3, 0.2)]);
    inp.D = VarSet::new(vec![c(-0.2, 0.35)]);
    let eps = c(0.25, -0.3);
    inp.E = VarSet::new(vec![eps]);
    let got = recipe_main(&inp, DEFAULT_MAX_PART).unwrap().value;

    let n = inp.N;
    let x = inp.A.concat(&inp.B.inv().unwrap());
    let cd: Complex64 = inp.C.values().iter().flat_map(|g| inp.D.values().iter().map(move |d| one() - g * d)).product();
    let psi_part: Complex64 = inp.C.values().iter().map(|g| g / (one() - eps * g)).sum();
    let mut total = c(0.0, 0.0);
    for (s, t) in x.splits(inp.B.len()) {
        let exp = (n + inp.A.len() - inp.D.len()) as i32;
        let tc: Complex64 = t.values().iter().flat_map(|a| inp.C.values().iter().map(move |g| one() - a * g)).product();
        let pre = e_prod(&s.neg()).powi(exp) * delta2(&inp.D, &s) / delta2(&t, &s) * tc / cd;
        let chi_part: Complex64 = (1..=(n - inp.C.len()))
            .map(|q| {
                let pneg: Complex64 = s.values().iter().map(|v| (-v).powi(-(q as i32))).sum();
                (-eps).powu(q as u32 - 1) * pneg
            })
            .sum();
        total += pre * (chi_part + psi_part) * -1.0;
    }
    let expected = e_prod(&inp.B.neg()).powu(n as u32) * total;
    assert!(rel_err(got, expected) < 1e-10, "{got} {expected}");
}

#[test]
fn certified_tails_at_default_cutoff() {
    let e = VarSet::new(vec![c(0.5, 0.3), c(-0.4, 0.4), c(0.2, -0.5)]);
    let f = VarSet::new(vec![c(0.5, 0.0), c(0.0, -0.6), c(-0.3, 0.3)]);
    assert!(logders_main(&e, &f, DEFAULT_MAX_PART).unwrap().truncation.tail_bound < 1e-10);
    assert!(completed_logders_main(&e, &f, 10, DEFAULT_MAX_PART).unwrap().truncation.tail_bound < 1e-10);
}

fn point() -> impl Strategy<Value = Complex64> {
    (0.3f64..0.9, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn outer_point() -> impl Strategy<Value = Complex64> {
    (0.4f64..1.4, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_forms_agree(a in prop::collection::vec(outer_point(), 0..3), b in prop::collection::vec(outer_point(), 0..3), n in 0usize..=6) {
        let (a, b) = (VarSet::new(a), VarSet::new(b));
        prop_assume!(a.concat(&b.inv().unwrap()).pairwise_distinct(0.2));
        let s = product_avg(&a, &b, n, ProductForm::Schur).unwrap();
        let t = product_avg(&a, &b, n, ProductForm::SplitSum).unwrap();
        prop_assert!(rel_err(s, t) < 1e-8);
    }

    #[test]
    fn recipe_symmetric_in_each_alphabet(a in prop::collection::vec(outer_point(), 1..3), b in prop::collection::vec(outer_point(), 0..2),
                                         cc in prop::collection::vec(point(), 0..2), e in prop::collection::vec(point(), 0..3),
                                         f in prop::collection::vec(point(), 0..2), d in point()) {
        let mut inp = RecipeInput::empty(4);
        inp.A = VarSet::new(a);
        inp.B = VarSet::new(b);
        prop_assume!(inp.A.concat(&inp.B.inv().unwrap()).pairwise_distinct(0.2));
        inp.C = VarSet::new(cc);
        inp.D = VarSet::new(vec![d]);
        inp.E = VarSet::new(e);
        inp.F = VarSet::new(f);
        let base = recipe_main(&inp, 30).unwrap().value;
        let mut rev = inp.clone();
        for set in [&mut rev.A, &mut rev.B, &mut rev.C, &mut rev.E, &mut rev.F] {
            let idx: Vec<usize> = (0..set.len()).rev().collect();
            *set = set.pick(&idx);
        }
        let other = recipe_main(&rev, 30).unwrap().value;
        prop_assert!(rel_err(base, other) < 1e-9, "{} {}", base, other);
    }

    #[test]
    fn ratios_match_recipe(a in prop::collection::vec(outer_point(), 1..3), b in prop::collection::vec(outer_point(), 0..3),
                           cc in prop::collection::vec(point(), 0..3), d in point(), n in 2usize..6) {
        let (a, b, cc) = (VarSet::new(a), VarSet::new(b), VarSet::new(cc));
        prop_assume!(a.concat(&b.inv().unwrap()).pairwise_distinct(0.2));
        let d = VarSet::new(vec![d]);
        let mut inp = RecipeInput::empty(n);
        inp.A = a.clone();
        inp.B = b.clone();
        inp.C = cc.clone();
        inp.D = d.clone();
        let r = recipe_main(&inp, DEFAULT_MAX_PART).unwrap().value;
        let v = ratio_avg(&a, &b, &cc, &d, n).unwrap();
        prop_assert!(rel_err(r, v) < 1e-9);
    }
}
