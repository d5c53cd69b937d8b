use crate::Partition;

/// Strictly increasing sequences of length `l` drawn from `1..=n`.
pub fn increasing_subsets(n: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < l - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l <= n {
        rec(1, n, l, &mut Vec::new(), &mut out);
    }
    out
}

fn valid_subsequence(n: usize, k: &[usize]) -> bool {
    k.windows(2).all(|w| w[0] < w[1]) && k.iter().all(|&i| (1..=n).contains(&i))
}

/// The subpartition `sub_n(λ, K)` with `μ_j = λ_{K_j} + n - K_j - l + j`.
///
/// `None` when `l(λ) > n` or `K` is not an increasing subsequence of `[n]`.
pub fn sub_partition(lambda: &Partition, n: usize, k: &[usize]) -> Option<Partition> {
    if lambda.len() > n || !valid_subsequence(n, k) {
        return None;
    }
    let l = k.len();
    let parts = k
        .iter()
        .enumerate()
        .map(|(j, &kj)| lambda.part(kj) + n + j + 1 - kj - l)
        .collect();
    Partition::new(parts).ok()
}

/// `C_n(K)`, the increasing rearrangement of `(n - j + 1 : j ∉ K)`.
///
/// `None` when `K` is not an increasing subsequence of `[n]`.
pub fn c_seq(n: usize, k: &[usize]) -> Option<Vec<usize>> {
    if !valid_subsequence(n, k) {
        return None;
    }
    let mut out: Vec<usize> = (1..=n).filter(|j| !k.contains(j)).map(|j| n - j + 1).collect();
    out.sort_unstable();
    Some(out)
}
