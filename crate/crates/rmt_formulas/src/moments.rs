use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use partition_core::Partition;
use serde::{Deserialize, Serialize};
use symfunc_numeric::{delta2, e_prod, schur, Complex64, VarSet};

use crate::RmtError;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `∫ |χ_g(1)|^{2k} dg = ∏_{j<N} j! (j+2k)! / (j+k)!²` over `U(N)`.
pub fn moment_unitary(k: usize, n: usize) -> BigRational {
    let mut r = BigRational::one();
    for j in 0..n {
        let num = factorial(j) * factorial(j + 2 * k);
        let den = factorial(j + k).pow(2u32);
        r *= BigRational::new(num, den);
    }
    r
}

/// Leading coefficient `f_k = ∏_{j<k} j! / (j+k)!` of the `2k`-th moment.
pub fn moment_leading(k: usize) -> BigRational {
    let mut r = BigRational::one();
    for j in 0..k {
        r *= BigRational::new(factorial(j), factorial(j + k));
    }
    r
}

/// Which closed form [`product_avg`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductForm {
    /// `∏β^N s_{⟨N^m⟩}(A ∪ B^{-1})`.
    Schur,
    /// `∏β^N Σ_{S ∪ T} ∏ s^{n+N} / Δ(S; T)`.
    SplitSum,
}

impl FromStr for ProductForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "schur" => Ok(ProductForm::Schur),
            "split_sum" => Ok(ProductForm::SplitSum),
            other => Err(format!("unknown product form {other:?}")),
        }
    }
}

fn nonzero(x: &VarSet, name: &str) -> Result<(), RmtError> {
    if x.values().iter().any(|v| v.norm() == 0.0) {
        return Err(RmtError::Precondition(format!("{name} must not contain 0")));
    }
    Ok(())
}

/// `∫ ∏_A χ_g(α) ∏_B χ_{g^{-1}}(β) dg` over `U(N)`.
pub fn product_avg(a: &VarSet, b: &VarSet, n_dim: usize, form: ProductForm) -> Result<Complex64, RmtError> {
    nonzero(a, "A")?;
    nonzero(b, "B")?;
    let m = b.len();
    let n = a.len();
    let x = a.concat(&b.inv().expect("nonzero"));
    let lead = e_prod(b).powu(n_dim as u32);
    match form {
        ProductForm::Schur => Ok(lead * schur(&Partition::rectangle(n_dim, m), &x)?),
        ProductForm::SplitSum => {
            if !x.pairwise_distinct(symfunc_numeric::DELTA_MIN) {
                return Err(RmtError::Precondition("A ∪ B^{-1} must be pairwise distinct".into()));
            }
            let mut total = Complex64::new(0.0, 0.0);
            for (s, t) in x.splits(m) {
                total += e_prod(&s).powu((n + n_dim) as u32) / delta2(&s, &t);
            }
            Ok(lead * total)
        }
    }
}
