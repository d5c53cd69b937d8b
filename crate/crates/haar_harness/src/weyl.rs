use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::HaarError;

/// Agreement required between successive grid doublings.
pub const WEYL_TOL: f64 = 1e-10;

const MAX_GRID: usize = 256;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn grid_mean<F: Fn(&[Complex64]) -> Complex64>(f: &F, n: usize, g: usize) -> Complex64 {
    let nodes: Vec<Complex64> = (0..g).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / g as f64)).collect();
    let mut idx = vec![0usize; n];
    let mut z = vec![Complex64::new(0.0, 0.0); n];
    let mut total = Complex64::new(0.0, 0.0);
    loop {
        for (zj, &i) in z.iter_mut().zip(&idx) {
            *zj = nodes[i];
        }
        let mut vdm = 1.0;
        for a in 0..n {
            for b in a + 1..n {
                vdm *= (z[a] - z[b]).norm_sqr();
            }
        }
        total += f(&z) * vdm;
        let mut d = 0;
        loop {
            if d == n {
                return total / (g as f64).powi(n as i32);
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

/// `(N! (2π)^N)^{-1} ∫ f(e^{iθ}) |Δ(e^{iθ})|² dθ`, the Haar average of a
/// class function on `U(N)`, by the trapezoid rule on a tensor grid of
/// `grid` nodes per angle, doubled until two estimates agree.
pub fn weyl_quadrature<F>(f: F, n: usize, grid: usize) -> Result<Complex64, HaarError>
where
    F: Fn(&[Complex64]) -> Complex64,
{
    if !(1..=3).contains(&n) {
        return Err(HaarError::Precondition(format!("need 1 <= N <= 3, got {n}")));
    }
    let norm = factorial(n);
    let mut g = grid.max(2);
    let mut prev = grid_mean(&f, n, g) / norm;
    loop {
        g *= 2;
        let cur = grid_mean(&f, n, g) / norm;
        let diff = (cur - prev).norm();
        if diff <= WEYL_TOL * cur.norm().max(1.0) {
            return Ok(cur);
        }
        if g >= MAX_GRID {
            return Err(HaarError::Quadrature(diff));
        }
        prev = cur;
    }
}
