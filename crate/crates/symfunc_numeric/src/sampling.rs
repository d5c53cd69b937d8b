//! Seeded random instances: separated complex points and small partitions.

use num_complex::Complex64;
use partition_core::{partitions_bounded, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::VarSet;

/// Generator for instance `idx` of a suite seeded with `seed`.
pub fn instance_rng(seed: u64, idx: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(idx);
    rng
}

/// A point with modulus uniform in `[rmin, rmax]` and uniform argument.
pub fn annulus_point<R: Rng>(rng: &mut R, rmin: f64, rmax: f64) -> Complex64 {
    let r = rng.random_range(rmin..=rmax);
    let t = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, t)
}

/// `n` annulus points at distance at least `min_sep` from each other and
/// from every point of `avoid`, by rejection.
pub fn separated_points<R: Rng>(
    rng: &mut R,
    n: usize,
    rmin: f64,
    rmax: f64,
    min_sep: f64,
    avoid: &VarSet,
) -> VarSet {
    let mut pts: Vec<Complex64> = Vec::with_capacity(n);
    while pts.len() < n {
        let z = annulus_point(rng, rmin, rmax);
        let ok = pts.iter().chain(avoid.values()).all(|w| (z - w).norm() >= min_sep);
        if ok {
            pts.push(z);
        }
    }
    VarSet::new(pts)
}

/// A partition of size at most `max_size`, length at most `max_len` and
/// largest part at most `max_part`: size uniform, shape uniform given size.
pub fn random_partition<R: Rng>(rng: &mut R, max_size: usize, max_len: usize, max_part: usize) -> Partition {
    loop {
        let size = rng.random_range(0..=max_size);
        let all = partitions_bounded(size, max_len, max_part);
        if !all.is_empty() {
            return all[rng.random_range(0..all.len())].clone();
        }
    }
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        v.swap(i, j);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_separated() {
        let a = separated_points(&mut instance_rng(7, 3), 4, 0.3, 1.5, 0.1, &VarSet::empty());
        let b = separated_points(&mut instance_rng(7, 3), 4, 0.3, 1.5, 0.1, &VarSet::empty());
        assert_eq!(a, b);
        assert!(a.pairwise_distinct(0.1));
        assert!(a.values().iter().all(|z| z.norm() >= 0.3 - 1e-12 && z.norm() <= 1.5 + 1e-12));
        let c = separated_points(&mut instance_rng(7, 4), 4, 0.3, 1.5, 0.1, &VarSet::empty());
        assert_ne!(a, c);
    }

    #[test]
    fn partition_bounds() {
        let mut rng = instance_rng(1, 0);
        for _ in 0..200 {
            let p = random_partition(&mut rng, 10, 3, 4);
            assert!(p.size() <= 10 && p.len() <= 3 && p.first() <= 4);
        }
        let mut perm = random_permutation(&mut rng, 6);
        perm.sort();
        assert_eq!(perm, (0..6).collect::<Vec<_>>());
    }
}
