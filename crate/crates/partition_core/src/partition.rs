use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::PartitionError;

/// An integer partition with strictly positive, weakly decreasing parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Sorts arbitrary nonnegative integers into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `⟨width^height⟩`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        Self::from_parts_unchecked(vec![width; height])
    }

    /// The staircase `ρ_n = (n - 1, ..., 1, 0)`.
    pub fn staircase(n: usize) -> Self {
        Self::from_parts_unchecked((0..n).rev().collect())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, or 0.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The part `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the box at column `col`, row `row` lies in the diagram.
    ///
    /// Boxes with a nonpositive coordinate count as inside.
    pub fn contains_box(&self, col: i64, row: i64) -> bool {
        if col <= 0 || row <= 0 {
            return true;
        }
        (self.part(row as usize) as i64) >= col
    }

    /// Diagram containment `other ⊂ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether the diagram fits in `height` rows of length `width`.
    pub fn fits_in(&self, width: usize, height: usize) -> bool {
        self.len() <= height && self.first() <= width
    }

    /// Map from part value to its multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Multiplicity `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = ∏ i^{m_i} m_i!` as an exact rational.
    pub fn z_stat(&self) -> BigRational {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        BigRational::from_integer(z)
    }

    /// `z_λ` as a float.
    pub fn z_f64(&self) -> f64 {
        let mut z = 1.0;
        for (i, m) in self.multiplicities() {
            for j in 1..=m {
                z *= (i * j) as f64;
            }
        }
        z
    }

    /// Componentwise sum `λ + μ`.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (1..=n).map(|i| self.part(i) + other.part(i)).collect();
        Self::from_parts_unchecked(parts)
    }

    /// `λ + ⟨k^l⟩`, adding `k` to each of the first `l` parts.
    pub fn add_rect(&self, k: usize, l: usize) -> Partition {
        self.add(&Partition::rectangle(k, l))
    }

    /// `λ - ⟨k^l⟩` when every one of the first `l` parts is at least `k`
    /// and the result is a partition.
    pub fn sub_rect(&self, k: usize, l: usize) -> Option<Partition> {
        let n = self.len().max(l);
        let mut parts = Vec::with_capacity(n);
        for i in 1..=n {
            let p = self.part(i);
            if i <= l {
                parts.push(p.checked_sub(k)?);
            } else {
                parts.push(p);
            }
        }
        Partition::new(parts).ok()
    }

    /// Concatenation of `self` padded to `len` parts followed by `tail`.
    pub fn concat_padded(&self, len: usize, tail: &Partition) -> Result<Partition, PartitionError> {
        if self.len() > len {
            return Err(PartitionError::TooLong { partition: self.clone(), max: len });
        }
        let mut parts = self.padded(len);
        parts.extend_from_slice(tail.parts());
        Partition::new(parts)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        Self::from_multiset(v)
    }

    /// Multiset difference `self ∖ other`, if `other` is a sub-multiset.
    pub fn multiset_minus(&self, other: &Partition) -> Option<Partition> {
        let mut counts = self.multiplicities();
        for &p in &other.parts {
            let c = counts.get_mut(&p)?;
            if *c == 0 {
                return None;
            }
            *c -= 1;
        }
        let v = counts.iter().rev().flat_map(|(&p, &c)| std::iter::repeat_n(p, c)).collect();
        Some(Self::from_parts_unchecked(v))
    }

    /// Subtracts 1 from every part: `λ - ⟨1^{l(λ)}⟩`.
    pub fn minus_ones(&self) -> Partition {
        Self::from_parts_unchecked(self.parts.iter().map(|p| p - 1).collect())
    }

    /// First `l` parts `λ_{[l]}`.
    pub fn prefix(&self, l: usize) -> Partition {
        Partition { parts: self.parts.iter().take(l).copied().collect() }
    }

    /// Parts from 1-based position `i` on, `λ_{(i, i+1, ...)}`.
    pub fn suffix_from(&self, i: usize) -> Partition {
        assert!(i >= 1);
        Partition { parts: self.parts.iter().skip(i - 1).copied().collect() }
    }

    /// Parts at the given 1-based positions.
    pub fn select(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&i| self.part(i)).collect()
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// Error parsing a comma separated partition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePartitionError {
    /// A field is not a nonnegative integer.
    #[error("invalid part {0:?}")]
    BadPart(String),
    /// Parts are out of order.
    #[error(transparent)]
    Invalid(#[from] PartitionError),
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Parses `"4,2,2"`; the empty string and `"0"` give `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| ParsePartitionError::BadPart(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::new(parts)?)
    }
}

/// Partitions with bounded size, length and largest part, in reverse
/// lexicographic order.
fn bounded(size: usize, max_len: usize, max_part: usize, out: &mut Vec<Partition>, cur: &mut Vec<usize>) {
    if size == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(size)).rev() {
        cur.push(p);
        bounded(size - p, max_len, p, out, cur);
        cur.pop();
    }
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    bounded(n, usize::MAX, n, &mut out, &mut Vec::new());
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `height` rows of length `width`.
pub fn partitions_in_box(width: usize, height: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for size in 0..=width * height {
        bounded(size, height, width, &mut out, &mut Vec::new());
    }
    out
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    bounded(n, max_len, max_part, &mut out, &mut Vec::new());
    out
}
