use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use partition_core::Partition;
use serde::Serialize;
use symfunc_numeric::VarSet;

use crate::parse;

/// Littlewood-Schur functions and unitary-group averages.
#[derive(Debug, Parser)]
#[command(name = "lsrmt", version)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override: relative error for verify, standard errors for mc, quadrature for explicit-rhs.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Output formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// JSON document.
    Json,
    /// CSV rows.
    Csv,
    /// `key: value` lines.
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single quantity.
    Compute {
        #[command(subcommand)]
        target: ComputeTarget,
    },
    /// Run a seeded identity suite.
    Verify(VerifyArgs),
    /// Monte Carlo average over Haar-random unitary matrices.
    Mc(McArgs),
}

#[derive(Debug, Subcommand)]
pub enum ComputeTarget {
    /// Schur polynomial `s_λ(X)`.
    Schur {
        #[arg(long, value_parser = parse::partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        x: VarSet,
    },
    /// Littlewood-Schur function `LS_λ(X; Y)`.
    Ls {
        #[arg(long, value_parser = parse::partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        x: VarSet,
        #[arg(long, value_parser = parse::varset, default_value = "", allow_hyphen_values = true)]
        y: VarSet,
    },
    /// The `(m, n)`-overlap `μ ⋆ ν`.
    Overlap {
        #[arg(long, value_parser = parse::partition)]
        mu: Partition,
        #[arg(long, value_parser = parse::partition)]
        nu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// The `(m, n)`-index of `λ`.
    Index {
        #[arg(long, value_parser = parse::partition)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Littlewood-Richardson coefficient `c^λ_{μν}`.
    Lrcoeff {
        #[arg(long, value_parser = parse::partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse::partition)]
        mu: Partition,
        #[arg(long, value_parser = parse::partition)]
        nu: Partition,
    },
    /// Exact moment `∫ |χ_g(1)|^{2k} dg` over `U(N)`.
    Moment {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n_dim: usize,
    },
    /// Main term of the ratio average.
    RatioMain {
        #[arg(long, value_parser = parse::varset, default_value = "", allow_hyphen_values = true)]
        a: VarSet,
        #[arg(long, value_parser = parse::varset, default_value = "", allow_hyphen_values = true)]
        b: VarSet,
        #[arg(long, value_parser = parse::varset, default_value = "", allow_hyphen_values = true)]
        c: VarSet,
        #[arg(long, value_parser = parse::varset, default_value = "", allow_hyphen_values = true)]
        d: VarSet,
        #[arg(long = "N")]
        n_dim: usize,
    },
    /// Main term of the average of products of logarithmic derivatives.
    LogdersMain {
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        e: VarSet,
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        f: VarSet,
        #[arg(long = "P", default_value_t = rmt_formulas::DEFAULT_MAX_PART)]
        max_part: usize,
    },
    /// Main term of the completed logarithmic derivative average.
    CompletedMain {
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        e: VarSet,
        #[arg(long, value_parser = parse::varset, allow_hyphen_values = true)]
        f: VarSet,
        #[arg(long = "N")]
        n_dim: usize,
        #[arg(long = "P", default_value_t = rmt_formulas::DEFAULT_MAX_PART)]
        max_part: usize,
    },
    /// Main term of the explicit formula for eigenvalue sums.
    ExplicitRhs {
        /// Test function: constant[:c], identity or rational[:c].
        #[arg(long, default_value = "constant")]
        h: String,
        /// Symmetric weight: constant[:c], product or sum.
        #[arg(long, default_value = "constant")]
        f: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0.75)]
        r: f64,
        #[arg(long = "N")]
        n_dim: usize,
        #[arg(long, default_value_t = 16)]
        grid: usize,
        #[arg(long = "P", default_value_t = rmt_formulas::DEFAULT_MAX_PART)]
        max_part: usize,
    },
}

/// Identity suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    LsProperties,
    #[value(name = "overlap-1")]
    Overlap1,
    #[value(name = "overlap-2")]
    Overlap2,
    MnAll,
    Cauchy,
    RecipeConsistency,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Random instances; each suite has its own default.
    #[arg(long)]
    pub instances: Option<usize>,
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Estimator key, e.g. `abs_char_sq@1` or `logder_pair`.
    #[arg(long)]
    pub estimator: String,
    #[arg(long = "N")]
    pub n_dim: usize,
    #[arg(long = "M", default_value_t = 100_000)]
    pub samples: usize,
    /// Point `ε` for the paired estimators.
    #[arg(long)]
    pub eps: Option<f64>,
    /// Point `φ` for the paired estimators.
    #[arg(long)]
    pub phi: Option<f64>,
    /// Points `α, β, γ, δ` of the ratio estimator.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub beta: Option<Complex64>,
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub gamma: Option<Complex64>,
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub delta: Option<Complex64>,
}
