use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use partition_core::{mn_index, overlap, OverlapOutcome};
use rmt_formulas::{ExplicitOptions, SymTestFunction, TestFunction, TruncatedValue};
use serde_json::{json, Value};
use symfunc_numeric::{ls_comb, ls_eval, lr_coeff, rel_err, schur, schur_comb, ComplexJson, DEFAULT_BOX_CAP};

use crate::args::{Cli, ComputeTarget};
use crate::output::key_value_table;
use crate::parse::{format_complex, format_partition, format_varset};
use crate::{config, usage, CliError, Outcome};

const EXPLICIT_TOL: f64 = 1e-8;

fn cj(z: Complex64) -> Value {
    json!(ComplexJson::from(z))
}

fn truncated(t: &TruncatedValue) -> Value {
    json!({ "value": cj(t.value), "truncation": t.truncation })
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn s<T: ToString>(x: T) -> Value {
    Value::from(x.to_string())
}

pub(crate) fn run(cli: &Cli, target: &ComputeTarget) -> Result<Outcome, CliError> {
    let mut tolerance = None;
    let (name, p, theorem, result) = match target {
        ComputeTarget::Schur { lambda, x } => {
            let v = schur(lambda, x).map_err(usage)?;
            let oracle = if lambda.size() <= DEFAULT_BOX_CAP { schur_comb(lambda, x).ok() } else { None };
            let mut r = json!({ "value": cj(v) });
            if let Some(o) = oracle {
                r["tableaux_value"] = cj(o);
                r["rel_err"] = Value::from(rel_err(v, o));
            }
            ("schur", params(&[("lambda", s(format_partition(lambda))), ("x", s(format_varset(x)))]), "schur_function", r)
        }
        ComputeTarget::Ls { lambda, x, y } => {
            let v = ls_eval(lambda, x, y).map_err(usage)?;
            let o = ls_comb(lambda, x, y).map_err(usage)?;
            let r = json!({
                "value": cj(v),
                "lr_expansion_value": cj(o),
                "rel_err": rel_err(v, o),
                "index": mn_index(lambda, y.len(), x.len()),
            });
            ("ls", params(&[("lambda", s(format_partition(lambda))), ("x", s(format_varset(x))), ("y", s(format_varset(y)))]), "littlewood_schur", r)
        }
        ComputeTarget::Overlap { mu, nu, m, n } => {
            let r = match overlap(mu, nu, *m, *n).map_err(usage)? {
                OverlapOutcome::Finite { partition, sign } => json!({ "result": partition.parts(), "sign": sign }),
                OverlapOutcome::Infinite => json!({ "result": "infinite", "sign": 0 }),
            };
            let p = params(&[("mu", s(format_partition(mu))), ("nu", s(format_partition(nu))), ("m", json!(m)), ("n", json!(n))]);
            ("overlap", p, "overlap", r)
        }
        ComputeTarget::Index { lambda, m, n } => {
            let r = json!({ "value": mn_index(lambda, *m, *n) });
            ("index", params(&[("lambda", s(format_partition(lambda))), ("m", json!(m)), ("n", json!(n))]), "mn_index", r)
        }
        ComputeTarget::Lrcoeff { lambda, mu, nu } => {
            let r = json!({ "value": lr_coeff(lambda, mu, nu) });
            ("lrcoeff", params(&[("lambda", s(format_partition(lambda))), ("mu", s(format_partition(mu))), ("nu", s(format_partition(nu)))]), "littlewood_richardson", r)
        }
        ComputeTarget::Moment { k, n_dim } => {
            let v = rmt_formulas::moment_unitary(*k, *n_dim);
            let f = rmt_formulas::moment_leading(*k);
            let scaled = v.to_f64().unwrap_or(f64::NAN) / (*n_dim as f64).powi((k * k) as i32);
            let r = json!({
                "value": v.to_string(),
                "leading_coefficient": f.to_string(),
                "ratio_to_leading": scaled / f.to_f64().unwrap_or(f64::NAN),
            });
            ("moment", params(&[("k", json!(k)), ("N", json!(n_dim))]), "moments", r)
        }
        ComputeTarget::RatioMain { a, b, c, d, n_dim } => {
            let v = rmt_formulas::ratio_avg(a, b, c, d, *n_dim).map_err(usage)?;
            let p = params(&[
                ("A", s(format_varset(a))),
                ("B", s(format_varset(b))),
                ("C", s(format_varset(c))),
                ("D", s(format_varset(d))),
                ("N", json!(n_dim)),
            ]);
            ("ratio-main", p, "ratios", json!({ "value": cj(v) }))
        }
        ComputeTarget::LogdersMain { e, f, max_part } => {
            let v = rmt_formulas::logders_main(e, f, *max_part).map_err(usage)?;
            let p = params(&[("E", s(format_varset(e))), ("F", s(format_varset(f))), ("P", json!(max_part))]);
            ("logders-main", p, "log_derivatives", truncated(&v))
        }
        ComputeTarget::CompletedMain { e, f, n_dim, max_part } => {
            let v = rmt_formulas::completed_logders_main(e, f, *n_dim, *max_part).map_err(usage)?;
            let p = params(&[
                ("E", s(format_varset(e))),
                ("F", s(format_varset(f))),
                ("N", json!(n_dim)),
                ("P", json!(max_part)),
            ]);
            ("completed-main", p, "completed_log_derivatives", truncated(&v))
        }
        ComputeTarget::ExplicitRhs { h, f, n, r, n_dim, grid, max_part } => {
            let hf: TestFunction = h.parse().map_err(usage)?;
            let ff: SymTestFunction = f.parse().map_err(usage)?;
            let tol = cli.tolerance.unwrap_or(EXPLICIT_TOL);
            tolerance = Some(tol);
            let opts = ExplicitOptions { grid: *grid, tol, max_part: *max_part };
            let v = rmt_formulas::explicit_formula_rhs(&hf, &ff, *n, *r, *n_dim, &opts).map_err(usage)?;
            let p = params(&[
                ("h", s(&hf)),
                ("f", s(f)),
                ("n", json!(n)),
                ("r", json!(r)),
                ("N", json!(n_dim)),
                ("grid", json!(grid)),
                ("P", json!(max_part)),
            ]);
            let res = json!({
                "value": cj(v.value),
                "value_text": format_complex(v.value),
                "grid": v.grid,
                "truncation": v.truncation,
            });
            ("explicit-rhs", p, "explicit_formula", res)
        }
    };
    let mut result = result;
    result["theorem"] = Value::from(theorem);
    result["inputs"] = json!(p);
    let table = key_value_table(&result);
    Ok(Outcome { config: config(cli, "compute", Some(name), p, tolerance), result, pass: None, table })
}
