use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{Partition, PartitionError};

/// A ribbon `to ∖ from` of the given size and height.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RibbonStep {
    /// Inner shape.
    pub from: Partition,
    /// Outer shape.
    pub to: Partition,
    /// Number of boxes.
    pub size: usize,
    /// Number of rows occupied minus one.
    pub height: usize,
}

fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 1..=outer.len() {
        for c in (inner.part(r) + 1)..=outer.part(r) {
            cells.push((c, r));
        }
    }
    cells
}

/// Height of the skew shape `λ ∖ μ` if it is a ribbon, `None` otherwise.
///
/// The empty skew shape is not a ribbon.
pub fn ribbon_height(lambda: &Partition, mu: &Partition) -> Result<Option<usize>, PartitionError> {
    if !lambda.contains(mu) {
        return Err(PartitionError::NotContained { inner: mu.clone(), outer: lambda.clone() });
    }
    let cells: BTreeSet<(usize, usize)> = skew_cells(lambda, mu).into_iter().collect();
    let Some(&start) = cells.iter().next() else {
        return Ok(None);
    };
    for &(c, r) in &cells {
        if cells.contains(&(c + 1, r)) && cells.contains(&(c, r + 1)) && cells.contains(&(c + 1, r + 1)) {
            return Ok(None);
        }
    }
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((c, r)) = stack.pop() {
        let mut nbrs = vec![(c + 1, r), (c, r + 1)];
        if c > 1 {
            nbrs.push((c - 1, r));
        }
        if r > 1 {
            nbrs.push((c, r - 1));
        }
        for nb in nbrs {
            if cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    if seen.len() != cells.len() {
        return Ok(None);
    }
    let rows: BTreeSet<usize> = cells.iter().map(|&(_, r)| r).collect();
    Ok(Some(rows.len() - 1))
}

fn height_of(seg: &[(usize, usize)]) -> usize {
    let lo = seg.iter().map(|&(_, r)| r).min().unwrap_or(0);
    let hi = seg.iter().map(|&(_, r)| r).max().unwrap_or(0);
    hi - lo
}

/// All `λ ⊃ μ` with `λ ∖ μ` a `k`-ribbon and at most `max_len` parts.
///
/// Ribbons are read off as windows of the outer rim of `μ`, listed from the
/// bottom-left end upward.
pub fn ribbons_added(mu: &Partition, k: usize, max_len: Option<usize>) -> Vec<RibbonStep> {
    if k == 0 {
        return Vec::new();
    }
    let rows = mu.len() + k;
    let mut rim = Vec::new();
    for r in (1..=rows).rev() {
        let hi = if r == 1 { mu.part(1) + k } else { mu.part(r - 1) + 1 };
        for c in (mu.part(r) + 1)..=hi {
            rim.push((c, r));
        }
    }
    let mut out = Vec::new();
    for seg in rim.windows(k) {
        let mut added: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for &(c, r) in seg {
            let e = added.entry(r).or_insert((c, 0));
            e.0 = e.0.min(c);
            e.1 += 1;
        }
        if added.iter().any(|(&r, &(lo, _))| lo != mu.part(r) + 1) {
            continue;
        }
        let len = mu.len().max(*added.keys().last().unwrap());
        let parts: Vec<usize> =
            (1..=len).map(|r| mu.part(r) + added.get(&r).map_or(0, |x| x.1)).collect();
        let Ok(to) = Partition::new(parts) else { continue };
        if max_len.is_some_and(|m| to.len() > m) {
            continue;
        }
        out.push(RibbonStep { from: mu.clone(), to, size: k, height: height_of(seg) });
    }
    out
}

/// All `μ ⊂ λ` with `λ ∖ μ` a `k`-ribbon.
///
/// Ribbons are read off as windows of the inner rim of `λ`.
pub fn ribbons_removed(lambda: &Partition, k: usize) -> Vec<RibbonStep> {
    if k == 0 {
        return Vec::new();
    }
    let mut rim = Vec::new();
    for r in (1..=lambda.len()).rev() {
        for c in lambda.part(r + 1).max(1)..=lambda.part(r) {
            rim.push((c, r));
        }
    }
    let mut out = Vec::new();
    for seg in rim.windows(k) {
        let mut removed: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for &(c, r) in seg {
            let e = removed.entry(r).or_insert((c, 0));
            e.0 = e.0.max(c);
            e.1 += 1;
        }
        if removed.iter().any(|(&r, &(hi, _))| hi != lambda.part(r)) {
            continue;
        }
        let parts: Vec<usize> =
            (1..=lambda.len()).map(|r| lambda.part(r) - removed.get(&r).map_or(0, |x| x.1)).collect();
        let Ok(from) = Partition::new(parts) else { continue };
        out.push(RibbonStep { from, to: lambda.clone(), size: k, height: height_of(seg) });
    }
    out
}
