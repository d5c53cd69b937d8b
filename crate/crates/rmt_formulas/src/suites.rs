//! Consistency checks of the recipe main term against its specializations.

use symfunc_numeric::sampling::{instance_rng, separated_points};
use symfunc_numeric::{rel_err, VarSet, VerificationReport};

use crate::{logders_main, ratio_avg, recipe_main, RecipeInput, RmtError, DEFAULT_MAX_PART};

/// Relative tolerance for recipe consistency.
pub const RECIPE_TOL: f64 = 1e-8;

fn reversed(x: &VarSet) -> VarSet {
    let idx: Vec<usize> = (0..x.len()).rev().collect();
    x.pick(&idx)
}

/// The recipe against the ratio theorem (no log-derivatives), against the
/// log-derivative theorem (no ratios), and under reordering each alphabet.
pub fn recipe_consistency(seed: u64, instances: usize) -> Result<Vec<VerificationReport>, RmtError> {
    let mut errs = [0f64; 3];
    for i in 0..instances as u64 {
        let mut rng = instance_rng(seed, i);
        let n = 2 + (i % 5) as usize;
        let la = 1 + (i % 2) as usize;
        let lb = ((i / 2) % 3) as usize;
        let lc = ((i / 3) % 3) as usize;
        let none = VarSet::empty();
        let a = separated_points(&mut rng, la, 0.5, 1.4, 0.2, &none);
        let b_inv = separated_points(&mut rng, lb, 0.72, 2.0, 0.2, &a);
        let b = b_inv.inv().expect("nonzero");
        let c = separated_points(&mut rng, lc, 0.2, 0.8, 0.0, &none);
        let d = separated_points(&mut rng, 1, 0.2, 0.8, 0.0, &none);

        let mut inp = RecipeInput::empty(n);
        inp.A = a.clone();
        inp.B = b.clone();
        inp.C = c.clone();
        inp.D = d.clone();
        let r = recipe_main(&inp, DEFAULT_MAX_PART)?.value;
        errs[0] = errs[0].max(rel_err(r, ratio_avg(&a, &b, &c, &d, n)?));

        let le = 1 + (i % 3) as usize;
        let lf = if i % 4 == 0 { le + 1 } else { le };
        let e = separated_points(&mut rng, le, 0.15, 0.45, 0.0, &none);
        let f = separated_points(&mut rng, lf, 0.15, 0.45, 0.0, &none);
        let mut only = RecipeInput::empty(16);
        only.E = e.clone();
        only.F = f.clone();
        let r = recipe_main(&only, DEFAULT_MAX_PART)?.value;
        errs[1] = errs[1].max(rel_err(r, logders_main(&e, &f, DEFAULT_MAX_PART)?.value));

        inp.E = e;
        inp.F = f;
        let base = recipe_main(&inp, DEFAULT_MAX_PART)?.value;
        let mut rev = inp.clone();
        for set in [&mut rev.A, &mut rev.B, &mut rev.C, &mut rev.E, &mut rev.F] {
            *set = reversed(set);
        }
        errs[2] = errs[2].max(rel_err(base, recipe_main(&rev, DEFAULT_MAX_PART)?.value));
    }
    let names = ["recipe-vs-ratio", "recipe-vs-logders", "recipe-reordering"];
    Ok(names
        .iter()
        .zip(errs)
        .map(|(name, err)| VerificationReport::new(name, seed, instances, err, RECIPE_TOL))
        .collect())
}
