use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{parity_sign, Partition, PartitionError};

/// One step of a staircase walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    /// A south step.
    V,
    /// A west step.
    H,
}

/// A lattice path in the rectangle `𝔓(n, m)` with `n` columns and `m` rows,
/// from the top-right corner to the bottom-left corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StaircaseWalk {
    cols: usize,
    rows: usize,
    steps: Vec<Step>,
}

impl StaircaseWalk {
    /// Builds a walk from its steps; the counts of `H` and `V` give the
    /// rectangle.
    pub fn new(steps: Vec<Step>) -> Self {
        let rows = steps.iter().filter(|&&s| s == Step::V).count();
        StaircaseWalk { cols: steps.len() - rows, rows, steps }
    }

    /// Every walk in `𝔓(n, m)`, lexicographic in the steps with `V < H`.
    pub fn all(n: usize, m: usize) -> Vec<StaircaseWalk> {
        fn rec(v: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<StaircaseWalk>) {
            if v == 0 && h == 0 {
                out.push(StaircaseWalk::new(cur.clone()));
                return;
            }
            if v > 0 {
                cur.push(Step::V);
                rec(v - 1, h, cur, out);
                cur.pop();
            }
            if h > 0 {
                cur.push(Step::H);
                rec(v, h - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of columns `n`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// The steps in order.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn times(&self, kind: Step) -> Vec<usize> {
        (1..=self.steps.len()).filter(|&t| self.steps[t - 1] == kind).collect()
    }

    /// Times `V(π)` of the vertical steps, 1-based.
    pub fn vertical_times(&self) -> Vec<usize> {
        self.times(Step::V)
    }

    /// Times `H(π)` of the horizontal steps, 1-based.
    pub fn horizontal_times(&self) -> Vec<usize> {
        self.times(Step::H)
    }

    /// The partition `μ(π) ⊂ ⟨n^m⟩` above the walk.
    pub fn mu(&self) -> Partition {
        let parts = self
            .vertical_times()
            .iter()
            .enumerate()
            .map(|(i, &v)| i + 1 + self.cols - v)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// The partition `ν(π) ⊂ ⟨m^n⟩` below the walk, read by columns.
    pub fn nu(&self) -> Partition {
        self.nu_conjugate().conjugate()
    }

    /// `ν(π)'`, with `ν(π)' + ρ_n = (ρ_{m+n})_{H(π)}`.
    pub fn nu_conjugate(&self) -> Partition {
        let parts = self
            .horizontal_times()
            .iter()
            .enumerate()
            .map(|(j, &h)| self.rows + j + 1 - h)
            .collect();
        Partition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for StaircaseWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::V { 'V' } else { 'H' })?;
        }
        Ok(())
    }
}

/// Result of overlapping two partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapOutcome {
    /// A partition with a sign.
    Finite {
        /// The overlap `μ ⋆ ν`.
        partition: Partition,
        /// Sign of the sorting permutation.
        sign: i32,
    },
    /// The shifted parts collide.
    Infinite,
}

impl OverlapOutcome {
    /// The partition and sign, if finite.
    pub fn finite(&self) -> Option<(&Partition, i32)> {
        match self {
            OverlapOutcome::Finite { partition, sign } => Some((partition, *sign)),
            OverlapOutcome::Infinite => None,
        }
    }
}

/// The `(m, n)`-overlap `μ ⋆_{m,n} ν`.
///
/// `λ + ρ_{m+n}` is the decreasing rearrangement of `(μ + ρ_m) ∪ (ν + ρ_n)`
/// and the sign is the parity of the rearrangement.
pub fn overlap(mu: &Partition, nu: &Partition, m: usize, n: usize) -> Result<OverlapOutcome, PartitionError> {
    if mu.len() > m {
        return Err(PartitionError::TooLong { partition: mu.clone(), max: m });
    }
    if nu.len() > n {
        return Err(PartitionError::TooLong { partition: nu.clone(), max: n });
    }
    let mut seq: Vec<usize> = (1..=m).map(|i| mu.part(i) + m - i).collect();
    seq.extend((1..=n).map(|j| nu.part(j) + n - j));
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] == seq[j] {
                return Ok(OverlapOutcome::Infinite);
            }
            if seq[i] < seq[j] {
                inversions += 1;
            }
        }
    }
    seq.sort_unstable_by(|a, b| b.cmp(a));
    let total = m + n;
    let parts = seq.iter().enumerate().map(|(i, &s)| s - (total - 1 - i)).collect();
    Ok(OverlapOutcome::Finite {
        partition: Partition::from_parts_unchecked(parts),
        sign: parity_sign(inversions),
    })
}

/// One element of an overlap fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberEntry {
    /// Left factor, at most `m` parts.
    pub mu: Partition,
    /// Right factor, at most `n` parts.
    pub nu: Partition,
    /// Sign `ε(μ, ν)`.
    pub sign: i32,
    /// The labelling walk in `𝔓(n, m)`.
    pub walk: StaircaseWalk,
}

/// All `(μ, ν)` with `μ ⋆_{m,n} ν = λ`, indexed by walks `π ∈ 𝔓(n, m)`.
///
/// `π ↦ (μ(π) + λ_{V(π)}, ν(π)' + λ_{H(π)})` with sign `(-1)^{|ν(π)|}`.
pub fn overlap_fiber(lambda: &Partition, m: usize, n: usize) -> Result<Vec<FiberEntry>, PartitionError> {
    if lambda.len() > m + n {
        return Err(PartitionError::TooLong { partition: lambda.clone(), max: m + n });
    }
    let out = StaircaseWalk::all(n, m)
        .into_iter()
        .map(|walk| {
            let lv = walk.vertical_times().iter().map(|&v| lambda.part(v)).collect();
            let lh = walk.horizontal_times().iter().map(|&h| lambda.part(h)).collect();
            let nu_c = walk.nu_conjugate();
            FiberEntry {
                mu: walk.mu().add(&Partition::from_parts_unchecked(lv)),
                nu: nu_c.add(&Partition::from_parts_unchecked(lh)),
                sign: parity_sign(nu_c.size()),
                walk,
            }
        })
        .collect();
    Ok(out)
}
