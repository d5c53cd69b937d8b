use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use partition_core::Partition;

type ContentMap = BTreeMap<Partition, u64>;

fn cache() -> &'static Mutex<HashMap<(Partition, Partition), ContentMap>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), ContentMap>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<u32>>,
    counts: Vec<u64>,
    out: ContentMap,
}

impl Filler<'_> {
    fn get(&self, c: usize, r: usize) -> Option<u32> {
        if r == 0 || c <= self.inner.part(r) || c > self.outer.part(r) {
            return None;
        }
        Some(self.rows[r - 1][c - 1])
    }

    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            let content: Vec<usize> = self.counts.iter().map(|&c| c as usize).collect();
            let mu = Partition::new(content).expect("lattice words have partition content");
            *self.out.entry(mu).or_insert(0) += 1;
            return;
        }
        let (c, r) = self.cells[idx];
        let hi_row = self.get(c + 1, r).unwrap_or(u32::MAX);
        let lo_col = self.get(c, r - 1).map_or(1, |v| v + 1);
        let top = (self.counts.len() as u32 + 1).min(hi_row).min(r as u32);
        for v in lo_col..=top {
            let vi = v as usize;
            if vi > 1 && self.counts.get(vi - 1).copied().unwrap_or(0) + 1 > self.counts[vi - 2] {
                continue;
            }
            if vi > self.counts.len() {
                self.counts.push(0);
            }
            self.counts[vi - 1] += 1;
            self.rows[r - 1][c - 1] = v;
            self.fill(idx + 1);
            self.counts[vi - 1] -= 1;
            if self.counts.last() == Some(&0) {
                self.counts.pop();
            }
        }
    }
}

/// Contents `μ` of Littlewood-Richardson tableaux of shape `λ / ν`, with
/// multiplicities `c^λ_{μν}`.
///
/// The tableaux are semistandard with a lattice reverse row word.
pub fn lr_contents(lambda: &Partition, nu: &Partition) -> ContentMap {
    if !lambda.contains(nu) {
        return ContentMap::new();
    }
    let key = (lambda.clone(), nu.clone());
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut cells = Vec::new();
    for r in 1..=lambda.len() {
        for c in ((nu.part(r) + 1)..=lambda.part(r)).rev() {
            cells.push((c, r));
        }
    }
    let rows = (1..=lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut f = Filler { outer: lambda, inner: nu, cells, rows, counts: Vec::new(), out: ContentMap::new() };
    f.fill(0);
    let out = f.out;
    cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Littlewood-Richardson coefficient `c^λ_{μν}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    lr_contents(lambda, nu).get(mu).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::{partitions_of, partitions_up_to};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coeff(&p(&[4, 2, 2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coeff(&p(&[4, 3, 2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 0);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[1, 1]), &Partition::empty()), 0);
        assert_eq!(lr_coeff(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[3, 3]), &p(&[2, 1]), &p(&[2, 1])), 1);
    }

    #[test]
    fn symmetric_and_conjugation_invariant() {
        for lam in partitions_up_to(7) {
            for mu in partitions_up_to(lam.size()) {
                for nu in partitions_of(lam.size() - mu.size()) {
                    let c = lr_coeff(&lam, &mu, &nu);
                    assert_eq!(c, lr_coeff(&lam, &nu, &mu), "{lam} {mu} {nu}");
                    assert_eq!(c, lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
                }
            }
        }
    }

    /// `Σ_λ c^λ_{μν} f^λ = C(|μ|+|ν|, |μ|) f^μ f^ν` with `f` the number of
    /// standard tableaux, counted by the hook length formula.
    #[test]
    fn standard_tableaux_count() {
        fn hooks(l: &Partition) -> u128 {
            let conj = l.conjugate();
            let num: u128 = (1..=l.size() as u128).product();
            let mut den: u128 = 1;
            for r in 1..=l.len() {
                for c in 1..=l.part(r) {
                    den *= ((l.part(r) - c) + (conj.part(c) - r) + 1) as u128;
                }
            }
            num / den
        }
        for a in 0..=4 {
            for b in 0..=4 {
                for mu in partitions_of(a) {
                    for nu in partitions_of(b) {
                        let total: u128 = partitions_of(a + b)
                            .iter()
                            .map(|l| lr_coeff(l, &mu, &nu) as u128 * hooks(l))
                            .sum();
                        let choose = (1..=a as u128).fold(1u128, |acc, i| acc * ((b as u128) + i) / i);
                        assert_eq!(total, choose * hooks(&mu) * hooks(&nu), "{mu} {nu}");
                    }
                }
            }
        }
    }
}
