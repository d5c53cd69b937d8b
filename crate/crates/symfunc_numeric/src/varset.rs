use std::fmt;
use std::ops::Index;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A complex number as `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex64 {
    fn from(z: ComplexJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// An ordered finite alphabet of complex variables.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<ComplexJson>", into = "Vec<ComplexJson>")]
pub struct VarSet {
    vals: Vec<Complex64>,
}

impl VarSet {
    /// Wraps the given values.
    pub fn new(vals: Vec<Complex64>) -> Self {
        VarSet { vals }
    }

    /// Real variables.
    pub fn real(vals: &[f64]) -> Self {
        VarSet { vals: vals.iter().map(|&x| Complex64::new(x, 0.0)).collect() }
    }

    /// The empty alphabet.
    pub fn empty() -> Self {
        VarSet { vals: Vec::new() }
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.vals.len()
    }

    /// True when there are no variables.
    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    /// The values.
    pub fn values(&self) -> &[Complex64] {
        &self.vals
    }

    /// `-X`.
    pub fn neg(&self) -> VarSet {
        VarSet { vals: self.vals.iter().map(|x| -x).collect() }
    }

    /// `X^{-1}`, or `None` if some variable is zero.
    pub fn inv(&self) -> Option<VarSet> {
        if self.vals.iter().any(|x| *x == Complex64::new(0.0, 0.0)) {
            return None;
        }
        Some(VarSet { vals: self.vals.iter().map(|x| x.inv()).collect() })
    }

    /// `aX`.
    pub fn scale(&self, a: Complex64) -> VarSet {
        VarSet { vals: self.vals.iter().map(|x| a * x).collect() }
    }

    /// Concatenation `X ∪ Y`.
    pub fn concat(&self, other: &VarSet) -> VarSet {
        let mut vals = self.vals.clone();
        vals.extend_from_slice(&other.vals);
        VarSet { vals }
    }

    /// Appends one variable.
    pub fn with(&self, x: Complex64) -> VarSet {
        let mut vals = self.vals.clone();
        vals.push(x);
        VarSet { vals }
    }

    /// Variables at the given 0-based positions.
    pub fn pick(&self, idx: &[usize]) -> VarSet {
        VarSet { vals: idx.iter().map(|&i| self.vals[i]).collect() }
    }

    /// Every split `X = S ∪ T` with `|S| = l`, both keeping the original order.
    pub fn splits(&self, l: usize) -> Vec<(VarSet, VarSet)> {
        let n = self.len();
        partition_core::increasing_subsets(n, l)
            .into_iter()
            .map(|s| {
                let s0: Vec<usize> = s.iter().map(|i| i - 1).collect();
                let t0: Vec<usize> = (0..n).filter(|i| !s0.contains(i)).collect();
                (self.pick(&s0), self.pick(&t0))
            })
            .collect()
    }

    /// Smallest pairwise distance, infinite for fewer than two variables.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.vals.len() {
            for j in (i + 1)..self.vals.len() {
                best = best.min((self.vals[i] - self.vals[j]).norm());
            }
        }
        best
    }

    /// Whether all pairwise distances are at least `delta`.
    pub fn pairwise_distinct(&self, delta: f64) -> bool {
        self.min_separation() >= delta
    }

    /// Whether every variable has modulus below `r`.
    pub fn abs_below(&self, r: f64) -> bool {
        self.vals.iter().all(|x| x.norm() < r)
    }
}

impl Index<usize> for VarSet {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.vals[i]
    }
}

impl From<Vec<ComplexJson>> for VarSet {
    fn from(v: Vec<ComplexJson>) -> Self {
        VarSet { vals: v.into_iter().map(Complex64::from).collect() }
    }
}

impl From<VarSet> for Vec<ComplexJson> {
    fn from(v: VarSet) -> Self {
        v.vals.into_iter().map(ComplexJson::from).collect()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.vals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Vandermonde product `Δ(X) = ∏_{i<j} (x_i - x_j)`.
pub fn delta(x: &VarSet) -> Complex64 {
    let v = x.values();
    let mut d = Complex64::new(1.0, 0.0);
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            d *= v[i] - v[j];
        }
    }
    d
}

/// `Δ(X; Y) = ∏_{x ∈ X, y ∈ Y} (x - y)`.
pub fn delta2(x: &VarSet, y: &VarSet) -> Complex64 {
    let mut d = Complex64::new(1.0, 0.0);
    for a in x.values() {
        for b in y.values() {
            d *= a - b;
        }
    }
    d
}

/// `e(X) = ∏ x`.
pub fn e_prod(x: &VarSet) -> Complex64 {
    x.values().iter().product()
}
