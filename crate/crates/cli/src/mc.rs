use std::collections::BTreeMap;

use haar_harness::{mc_average, Estimator, McRow};
use num_complex::Complex64;
use rmt_formulas::{ExplicitOptions, ProductForm, SymTestFunction, TestFunction};
use serde_json::{json, Value};
use symfunc_numeric::{ComplexJson, VarSet};

use crate::args::{Cli, McArgs};
use crate::{config, usage, CliError, Outcome};

/// Default acceptance band in standard errors.
pub const Z_TOL: f64 = 4.0;

fn single(z: Complex64) -> VarSet {
    VarSet::new(vec![z])
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Resolves the estimator key and the point flags.
pub fn resolve_estimator(args: &McArgs) -> Result<Estimator, String> {
    let base = args.estimator.split('@').next().unwrap_or_default();
    let mut est = if base == "ratio" && !args.estimator.contains('@') {
        match (args.alpha, args.beta, args.gamma, args.delta) {
            (Some(alpha), Some(beta), Some(gamma), Some(delta)) => Estimator::Ratio { alpha, beta, gamma, delta },
            _ => return Err("ratio needs --alpha, --beta, --gamma and --delta".into()),
        }
    } else {
        args.estimator.parse::<Estimator>()?
    };
    match &mut est {
        Estimator::LogderPair { eps, phi } | Estimator::CompletedPair { eps, phi } => {
            if let Some(e) = args.eps {
                *eps = e;
            }
            if let Some(p) = args.phi {
                *phi = p;
            }
        }
        _ => {
            if args.eps.is_some() || args.phi.is_some() {
                return Err(format!("--eps/--phi do not apply to {base}"));
            }
        }
    }
    Ok(est)
}

/// Closed-form main term of the average of `est` over `U(N)`, if one is
/// available, with its provenance.
pub fn predicted(est: &Estimator, n: usize) -> Result<Option<(Complex64, &'static str)>, String> {
    let err = |e: rmt_formulas::RmtError| e.to_string();
    let p = rmt_formulas::DEFAULT_MAX_PART;
    Ok(Some(match *est {
        Estimator::One => (real(1.0), "normalization"),
        Estimator::Trace => (real(0.0), "schur_orthogonality"),
        Estimator::AbsTraceSq => (real(if n == 0 { 0.0 } else { 1.0 }), "schur_orthogonality"),
        Estimator::PowerSum { k } => (real(if k == 0 { n as f64 } else { 0.0 }), "schur_orthogonality"),
        Estimator::AbsCharSq { z } => {
            let v = rmt_formulas::product_avg(&single(real(z)), &single(real(z)), n, ProductForm::Schur).map_err(err)?;
            (v, "moments")
        }
        Estimator::LogderPair { eps, phi } => {
            let v = rmt_formulas::logders_main(&single(real(eps)), &single(real(phi)), p).map_err(err)?;
            (v.value * eps * phi, "log_derivatives")
        }
        Estimator::CompletedPair { eps, phi } => {
            let v = rmt_formulas::completed_logders_main(&single(real(eps)), &single(real(phi)), n, p).map_err(err)?;
            (v.value, "completed_log_derivatives")
        }
        Estimator::Ratio { alpha, beta, gamma, delta } => {
            let v = rmt_formulas::ratio_avg(&single(alpha), &single(beta), &single(gamma), &single(delta), n).map_err(err)?;
            (v, "ratios")
        }
        Estimator::EigenSumRational { c } => {
            if c.abs() <= 1.0 {
                return Ok(None);
            }
            let r = 0.5 * (1.0 + 1.0 / c.abs());
            let v = rmt_formulas::explicit_formula_rhs(
                &TestFunction::Rational(c),
                &SymTestFunction::Constant(1.0),
                1,
                r,
                n,
                &ExplicitOptions::default(),
            )
            .map_err(err)?;
            (v.value, "explicit_formula")
        }
    }))
}

pub(crate) fn run(cli: &Cli, args: &McArgs) -> Result<Outcome, CliError> {
    let est = resolve_estimator(args).map_err(usage)?;
    if args.n_dim == 0 {
        return Err(usage("need N >= 1"));
    }
    let ztol = cli.tolerance.unwrap_or(Z_TOL);
    let e = mc_average(&est, args.n_dim, args.samples, cli.seed, cli.workers).map_err(usage)?;
    let pred = predicted(&est, args.n_dim).map_err(usage)?;
    let mut result = json!({
        "estimator": est.to_string(),
        "mean": ComplexJson::from(e.mean),
        "stderr": e.stderr,
        "samples": e.samples,
        "rejected": e.rejected,
        "rejection_rate": e.rejected as f64 / (e.samples + e.rejected) as f64,
        "seed": e.seed,
    });
    let mut pass = None;
    if let Some((v, theorem)) = pred {
        let z = e.z_score(v);
        result["predicted"] = json!(ComplexJson::from(v));
        result["theorem"] = Value::from(theorem);
        result["z_score"] = json!(z);
        pass = Some(z < ztol);
    }
    let mut params: BTreeMap<String, Value> = BTreeMap::new();
    params.insert("estimator".into(), Value::from(est.to_string()));
    params.insert("N".into(), Value::from(args.n_dim));
    params.insert("M".into(), Value::from(args.samples));
    let row = McRow::new(args.n_dim, args.samples, &e);
    let header = ["N", "M", "seed", "mean_re", "mean_im", "stderr"].map(String::from).to_vec();
    let rows = vec![vec![
        row.N.to_string(),
        row.M.to_string(),
        row.seed.to_string(),
        row.mean_re.to_string(),
        row.mean_im.to_string(),
        row.stderr.to_string(),
    ]];
    Ok(Outcome { config: config(cli, "mc", None, params, Some(ztol)), result, pass, table: (header, rows) })
}
