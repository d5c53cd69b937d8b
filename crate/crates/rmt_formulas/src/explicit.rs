use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use symfunc_numeric::Complex64;

use crate::logders::Truncation;
use crate::{RmtError, DEFAULT_MAX_PART};

/// Built-in single-variable test functions `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "c", rename_all = "snake_case")]
pub enum TestFunction {
    /// `h(z) = c`.
    Constant(f64),
    /// `h(z) = z`.
    Identity,
    /// `h(z) = 1 / (c - z)`.
    Rational(f64),
}

impl TestFunction {
    /// Evaluates `h(z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match *self {
            TestFunction::Constant(c) => Complex64::new(c, 0.0),
            TestFunction::Identity => z,
            TestFunction::Rational(c) => Complex64::new(1.0, 0.0) / (c - z),
        }
    }

    /// Radius of the pole, if any.
    pub fn pole_radius(&self) -> Option<f64> {
        match *self {
            TestFunction::Rational(c) => Some(c.abs()),
            _ => None,
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction::Constant(c) => write!(f, "constant:{c}"),
            TestFunction::Identity => write!(f, "identity"),
            TestFunction::Rational(c) => write!(f, "rational:{c}"),
        }
    }
}

fn parse_param(s: &str, default: f64) -> Result<(String, f64), String> {
    match s.split_once(':') {
        Some((name, v)) => Ok((name.to_string(), v.parse().map_err(|_| format!("bad parameter in {s:?}"))?)),
        None => Ok((s.to_string(), default)),
    }
}

impl FromStr for TestFunction {
    type Err = String;

    /// Keys `constant[:c]`, `identity` and `rational[:c]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, c) = parse_param(s, f64::NAN)?;
        match name.as_str() {
            "constant" => Ok(TestFunction::Constant(if c.is_nan() { 1.0 } else { c })),
            "identity" => Ok(TestFunction::Identity),
            "rational" => Ok(TestFunction::Rational(if c.is_nan() { 2.0 } else { c })),
            other => Err(format!("unknown test function {other:?}")),
        }
    }
}

/// Built-in symmetric test functions `f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "c", rename_all = "snake_case")]
pub enum SymTestFunction {
    /// `f = c`.
    Constant(f64),
    /// `f(z_1, ..., z_n) = z_1 ⋯ z_n`.
    Product,
    /// `f(z_1, ..., z_n) = z_1 + ... + z_n`.
    Sum,
}

impl SymTestFunction {
    /// Evaluates `f` at the given arguments.
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        match *self {
            SymTestFunction::Constant(c) => Complex64::new(c, 0.0),
            SymTestFunction::Product => z.iter().product(),
            SymTestFunction::Sum => z.iter().sum(),
        }
    }
}

impl fmt::Display for SymTestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymTestFunction::Constant(c) => write!(f, "constant:{c}"),
            SymTestFunction::Product => write!(f, "product"),
            SymTestFunction::Sum => write!(f, "sum"),
        }
    }
}

impl FromStr for SymTestFunction {
    type Err = String;

    /// Keys `constant[:c]`, `product` and `sum`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, c) = parse_param(s, 1.0)?;
        match name.as_str() {
            "constant" => Ok(SymTestFunction::Constant(c)),
            "product" => Ok(SymTestFunction::Product),
            "sum" => Ok(SymTestFunction::Sum),
            other => Err(format!("unknown symmetric test function {other:?}")),
        }
    }
}

/// Quadrature and truncation settings for [`explicit_formula_rhs`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExplicitOptions {
    /// Initial number of nodes per dimension.
    pub grid: usize,
    /// Agreement required between successive grid doublings.
    pub tol: f64,
    /// Largest part kept in the partition sum.
    pub max_part: usize,
}

impl Default for ExplicitOptions {
    fn default() -> Self {
        ExplicitOptions { grid: 16, tol: 1e-8, max_part: DEFAULT_MAX_PART }
    }
}

/// Result of [`explicit_formula_rhs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplicitValue {
    /// Main term.
    pub value: Complex64,
    /// Nodes per dimension of the accepted grid.
    pub grid: usize,
    /// Truncation of the partition sum.
    pub truncation: Truncation,
}

fn max_grid(n: usize) -> usize {
    match n {
        1 => 1 << 16,
        2 => 1 << 10,
        _ => 1 << 7,
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `Σ_{p=1}^{P} p x^p`.
fn weighted_geometric(x: Complex64, p: usize) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let pf = p as f64;
    x * (one - x.powu(p as u32) * (pf + 1.0) + x.powu(p as u32 + 1) * pf) / ((one - x) * (one - x))
}

struct Integrand<'a> {
    h: &'a TestFunction,
    f: &'a SymTestFunction,
    n: usize,
    r: f64,
    half_n: f64,
    max_part: usize,
}

impl Integrand<'_> {
    /// Trapezoid mean over a `g^n` grid of the `k`-th integrand, and the
    /// supremum of `|∏h f|` over the grid.
    fn mean(&self, k: usize, g: usize) -> (Complex64, f64) {
        let n = self.n;
        let nodes: Vec<Complex64> = (0..g).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / g as f64)).collect();
        let mut idx = vec![0usize; n];
        let mut total = Complex64::new(0.0, 0.0);
        let mut sup = 0.0f64;
        let mut args = vec![Complex64::new(0.0, 0.0); n];
        let mut inner = vec![Complex64::new(0.0, 0.0); n];
        let base = self.half_n.powi(n as i32);
        let cross = if n >= 2 { self.half_n.powi(n as i32 - 2) } else { 0.0 };
        loop {
            for j in 0..n {
                let e = nodes[idx[j]];
                if j < k {
                    args[j] = e.conj() * self.r;
                } else {
                    args[j] = e / self.r;
                }
                inner[j] = e.conj() * self.r;
            }
            let hf: Complex64 = args.iter().map(|&z| self.h.eval(z)).product::<Complex64>() * self.f.eval(&args);
            sup = sup.max(hf.norm());
            let mut s = Complex64::new(base, 0.0);
            if k >= 1 && n - k >= 1 {
                let mut lam = Complex64::new(0.0, 0.0);
                for a in &inner[..k] {
                    for b in &inner[k..] {
                        lam += weighted_geometric(a * b, self.max_part);
                    }
                }
                s += lam * cross;
            }
            total += hf * s;
            let mut d = 0;
            loop {
                if d == n {
                    return (total / (g as f64).powi(n as i32), sup);
                }
                idx[d] += 1;
                if idx[d] < g {
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
        }
    }
}

/// Main term of the explicit formula for
/// `∫ Σ_{j_1, ..., j_n} h(ρ_{j_1}) ⋯ h(ρ_{j_n}) f(ρ_{j_1}, ..., ρ_{j_n}) dg`:
///
/// `Σ_λ (N/2)^{n - 2l(λ)} z_λ (2π)^{-n} Σ_k C(n, k) ∫ ∏_{j<=k} h(r e^{-it_j}) ∏_{j>k} h(e^{it_j}/r)
///  × f(...) m_λ(r e^{-it_1}, ..., r e^{-it_k}) m_λ(r e^{-it_{k+1}}, ..., r e^{-it_n}) dt`.
///
/// Only `λ` with `l(λ) <= n/2` contribute, so for `n <= 3` the sum runs over
/// `λ = ∅` and one-part `λ = (p)` with `p <= P`, whose tail is bounded by
/// `k(n-k) (N/2)^{n-2} Σ_{p>P} p r^{2p}` times the supremum of `|∏h f|`.
/// Each torus integral uses the trapezoid rule, doubling the grid until two
/// successive estimates agree to `tol`.
pub fn explicit_formula_rhs(
    h: &TestFunction,
    f: &SymTestFunction,
    n: usize,
    r: f64,
    n_dim: usize,
    opts: &ExplicitOptions,
) -> Result<ExplicitValue, RmtError> {
    if !(r > 0.0 && r < 1.0) {
        return Err(RmtError::Precondition(format!("need 0 < r < 1, got {r}")));
    }
    if !(1..=3).contains(&n) {
        return Err(RmtError::Precondition(format!("need 1 <= n <= 3, got {n}")));
    }
    if let Some(p) = h.pole_radius() {
        if p >= r && p <= 1.0 / r {
            return Err(RmtError::Precondition(format!("h has a pole of modulus {p} inside the annulus")));
        }
    }
    let integrand = Integrand { h, f, n, r, half_n: n_dim as f64 / 2.0, max_part: opts.max_part };
    let eval = |g: usize| -> (Complex64, f64) {
        let mut total = Complex64::new(0.0, 0.0);
        let mut tail = 0.0;
        for k in 0..=n {
            let (m, sup) = integrand.mean(k, g);
            total += m * binomial(n, k);
            if k >= 1 && n - k >= 1 {
                let rr = r * r;
                let pf = opts.max_part as f64;
                let geo = rr.powi(opts.max_part as i32 + 1) * ((pf + 1.0) - pf * rr) / ((1.0 - rr) * (1.0 - rr));
                tail += binomial(n, k) * (k * (n - k)) as f64 * integrand.half_n.powi(n as i32 - 2) * geo * sup;
            }
        }
        (total, tail)
    };
    let mut g = opts.grid.max(2);
    let (mut prev, _) = eval(g);
    loop {
        let next_g = g * 2;
        let (cur, tail) = eval(next_g);
        let diff = (cur - prev).norm();
        if diff <= opts.tol * cur.norm().max(1.0) {
            return Ok(ExplicitValue {
                value: cur,
                grid: next_g,
                truncation: Truncation { max_part: opts.max_part, max_len: n / 2, tail_bound: tail },
            });
        }
        if next_g >= max_grid(n) {
            return Err(RmtError::Quadrature { diff, grid: next_g });
        }
        prev = cur;
        g = next_g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_identity() {
        let o = ExplicitOptions::default();
        let one = SymTestFunction::Constant(1.0);
        let v = explicit_formula_rhs(&TestFunction::Constant(1.0), &one, 1, 0.7, 9, &o).unwrap();
        assert!((v.value - Complex64::new(9.0, 0.0)).norm() < 1e-8);
        let w = explicit_formula_rhs(&TestFunction::Identity, &one, 1, 0.7, 9, &o).unwrap();
        assert!(w.value.norm() < 1e-8);
    }

    #[test]
    fn rational_single_sum() {
        let v = explicit_formula_rhs(
            &TestFunction::Rational(2.0),
            &SymTestFunction::Constant(1.0),
            1,
            0.7,
            8,
            &ExplicitOptions::default(),
        )
        .unwrap();
        assert!((v.value - Complex64::new(4.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn pair_sum_of_identity() {
        let v = explicit_formula_rhs(
            &TestFunction::Identity,
            &SymTestFunction::Constant(1.0),
            2,
            0.6,
            5,
            &ExplicitOptions::default(),
        )
        .unwrap();
        assert!(v.value.norm() < 1e-8, "{}", v.value);
        assert!(v.truncation.tail_bound < 1e-10);
    }

    #[test]
    fn parsing() {
        assert_eq!("rational:3".parse::<TestFunction>().unwrap(), TestFunction::Rational(3.0));
        assert_eq!("identity".parse::<TestFunction>().unwrap(), TestFunction::Identity);
        assert_eq!("constant".parse::<SymTestFunction>().unwrap(), SymTestFunction::Constant(1.0));
        assert!("bogus".parse::<TestFunction>().is_err());
        assert!(explicit_formula_rhs(
            &TestFunction::Rational(1.0),
            &SymTestFunction::Sum,
            1,
            0.5,
            4,
            &ExplicitOptions::default()
        )
        .is_err());
    }
}
