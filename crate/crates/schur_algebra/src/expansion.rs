use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use partition_core::Partition;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use symfunc_numeric::{basis_eval, schur, BasisKind, Complex64, SymError, VarSet};

/// Marker for the Schur basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schur;

/// Marker for the power-sum basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerSum;

/// A finite rational combination of basis elements indexed by partitions.
///
/// Zero coefficients are never stored.
#[derive(Debug, PartialEq, Eq)]
pub struct Expansion<B> {
    terms: BTreeMap<Partition, BigRational>,
    basis: PhantomData<B>,
}

/// Combination of Schur functions.
pub type SchurExpansion = Expansion<Schur>;

/// Combination of power sums.
pub type PowerSumExpansion = Expansion<PowerSum>;

impl<B> Clone for Expansion<B> {
    fn clone(&self) -> Self {
        Expansion { terms: self.terms.clone(), basis: PhantomData }
    }
}

impl<B> Default for Expansion<B> {
    fn default() -> Self {
        Expansion { terms: BTreeMap::new(), basis: PhantomData }
    }
}

impl<B> Expansion<B> {
    /// The zero combination.
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single basis element.
    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda, BigRational::from_integer(1.into()))
    }

    /// A single scaled basis element.
    pub fn term(lambda: Partition, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda, c);
        e
    }

    /// Adds `c` times a basis element.
    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Adds another combination.
    pub fn add_assign(&mut self, other: &Self) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    /// `self - other`.
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// Coefficient of a basis element.
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero combination.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }
}

fn to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl SchurExpansion {
    /// Numeric value at `X`.
    pub fn evaluate(&self, x: &VarSet) -> Result<Complex64, SymError> {
        let mut total = Complex64::new(0.0, 0.0);
        for (p, c) in &self.terms {
            total += schur(p, x)? * to_f64(c);
        }
        Ok(total)
    }
}

impl PowerSumExpansion {
    /// Numeric value at `X`.
    pub fn evaluate(&self, x: &VarSet) -> Result<Complex64, SymError> {
        let mut total = Complex64::new(0.0, 0.0);
        for (p, c) in &self.terms {
            total += basis_eval(BasisKind::Powersum, p, x)? * to_f64(c);
        }
        Ok(total)
    }

    /// `p_k · f`.
    pub fn multiply_p(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.union(&Partition::rectangle(k, 1)), c.clone());
        }
        out
    }

    /// Formal partial derivative `∂f/∂p_k`.
    pub fn derive_p(&self, k: usize) -> Self {
        let mut out = Self::zero();
        let single = Partition::rectangle(k, 1);
        for (p, c) in &self.terms {
            if let Some(rest) = p.multiset_minus(&single) {
                out.add_term(rest, c * BigRational::from_integer(BigInt::from(p.multiplicity(k))));
            }
        }
        out
    }
}

/// One serialized term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    /// Basis index.
    pub partition: Partition,
    /// Numerator of the coefficient.
    pub numerator: String,
    /// Positive denominator of the coefficient.
    pub denominator: String,
}

impl<B> Serialize for Expansion<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, B> Deserialize<'de> for Expansion<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let terms = Vec::<Term>::deserialize(d)?;
        let mut out = Self::zero();
        for t in terms {
            let n: BigInt = t.numerator.parse().map_err(D::Error::custom)?;
            let q: BigInt = t.denominator.parse().map_err(D::Error::custom)?;
            if q.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(t.partition, BigRational::new(n, q));
        }
        Ok(out)
    }
}

impl<B> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{p}")?;
        }
        Ok(())
    }
}
