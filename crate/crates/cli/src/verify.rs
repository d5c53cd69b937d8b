use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};
use symfunc_numeric::VerificationReport;

use crate::args::{Cli, Suite, VerifyArgs};
use crate::{config, usage, CliError, Outcome};

type Job = Box<dyn Fn() -> Result<Vec<VerificationReport>, String> + Send + Sync>;

fn one<E: ToString>(r: Result<VerificationReport, E>) -> Result<Vec<VerificationReport>, String> {
    r.map(|x| vec![x]).map_err(|e| e.to_string())
}

fn many<E: ToString>(r: Result<Vec<VerificationReport>, E>) -> Result<Vec<VerificationReport>, String> {
    r.map_err(|e| e.to_string())
}

fn default_instances(suite: Suite) -> usize {
    match suite {
        Suite::LsProperties | Suite::MnAll => 100,
        Suite::Overlap1 | Suite::Overlap2 => 200,
        Suite::Cauchy => 50,
        Suite::RecipeConsistency => 20,
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::LsProperties => "ls-properties",
        Suite::Overlap1 => "overlap-1",
        Suite::Overlap2 => "overlap-2",
        Suite::MnAll => "mn-all",
        Suite::Cauchy => "cauchy",
        Suite::RecipeConsistency => "recipe-consistency",
    }
}

fn jobs(suite: Suite, seed: u64, n: usize) -> Vec<Job> {
    use overlap_identities::suites as ov;
    let points = ov::DEFAULT_POINTS;
    match suite {
        Suite::LsProperties => vec![Box::new(move || many(symfunc_numeric::suites::ls_properties(seed, n)))],
        Suite::Overlap1 => vec![Box::new(move || one(ov::first_overlap_suite(seed, n, points)))],
        Suite::Overlap2 => vec![
            Box::new(move || one(ov::second_overlap_suite(seed, n, points))),
            Box::new(|| one(ov::fiber_cardinality(7, 4))),
            Box::new(move || one(ov::dual_cauchy_suite(seed, n))),
            Box::new(move || one(ov::subpartition_suite(seed))),
            Box::new(move || one(ov::complement_suite(seed))),
        ],
        Suite::MnAll => vec![Box::new(move || many(schur_algebra::suites::mn_all(seed, n)))],
        Suite::Cauchy => vec![Box::new(move || many(symfunc_numeric::suites::cauchy_suite(seed, n)))],
        Suite::RecipeConsistency => vec![Box::new(move || many(rmt_formulas::suites::recipe_consistency(seed, n)))],
    }
}

/// Runs a suite on a pool of `workers` threads, reports in a fixed order.
pub fn run_suite(suite: Suite, seed: u64, instances: usize, workers: usize) -> Result<Vec<VerificationReport>, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().map_err(|e| e.to_string())?;
    let list = jobs(suite, seed, instances);
    let parts: Vec<Result<Vec<VerificationReport>, String>> = pool.install(|| list.par_iter().map(|j| j()).collect());
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub(crate) fn run(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let instances = args.instances.unwrap_or(default_instances(args.suite));
    let mut reports = run_suite(args.suite, cli.seed, instances, cli.workers).map_err(usage)?;
    if let Some(tol) = cli.tolerance {
        for r in &mut reports {
            r.pass = r.max_rel_err <= tol && r.max_rel_err.is_finite();
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let failures: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    let result = json!({
        "suite": suite_name(args.suite),
        "reports": reports,
        "failures": failures,
    });
    let header = ["identity", "seed", "instances", "max_rel_err", "pass"].map(String::from).to_vec();
    let rows = reports
        .iter()
        .map(|r| vec![r.identity.clone(), r.seed.to_string(), r.instances.to_string(), r.max_rel_err.to_string(), r.pass.to_string()])
        .collect();
    let mut params: BTreeMap<String, Value> = BTreeMap::new();
    params.insert("suite".into(), Value::from(suite_name(args.suite)));
    params.insert("instances".into(), Value::from(instances));
    Ok(Outcome {
        config: config(cli, "verify", Some(suite_name(args.suite)), params, cli.tolerance),
        result,
        pass: Some(pass),
        table: (header, rows),
    })
}
