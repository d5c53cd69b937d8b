use std::io::Write;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{sample_haar_with, Estimator, HaarError};

/// Samples per independently seeded chunk.
pub const CHUNK: usize = 1024;

/// Monte Carlo mean of a functional with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    /// Sample mean.
    pub mean: Complex64,
    /// Standard error, the larger of the real and imaginary ones.
    pub stderr: f64,
    /// Accepted samples.
    pub samples: usize,
    /// Samples rejected at a pole or branch cut.
    pub rejected: usize,
    /// Seed.
    pub seed: u64,
}

impl MCEstimate {
    /// `(mean - target) / stderr`, measured by the larger component.
    pub fn z_score(&self, target: Complex64) -> f64 {
        let d = self.mean - target;
        let worst = d.re.abs().max(d.im.abs());
        if self.stderr == 0.0 {
            if worst == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            worst / self.stderr
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Moments {
    n: usize,
    rejected: usize,
    mean: Complex64,
    m2_re: f64,
    m2_im: f64,
}

impl Moments {
    fn push(&mut self, x: Complex64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        let d2 = x - self.mean;
        self.m2_re += d.re * d2.re;
        self.m2_im += d.im * d2.im;
    }

    fn merge(self, other: Moments) -> Moments {
        if other.n == 0 {
            return Moments { rejected: self.rejected + other.rejected, ..self };
        }
        if self.n == 0 {
            return Moments { rejected: self.rejected + other.rejected, ..other };
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let w = (self.n as f64) * (other.n as f64) / n as f64;
        Moments {
            n,
            rejected: self.rejected + other.rejected,
            mean: self.mean + d * (other.n as f64 / n as f64),
            m2_re: self.m2_re + other.m2_re + d.re * d.re * w,
            m2_im: self.m2_im + other.m2_im + d.im * d.im * w,
        }
    }
}

fn chunk(est: &Estimator, n: usize, seed: u64, idx: usize, count: usize) -> Result<Moments, HaarError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(idx as u64);
    let mut m = Moments::default();
    for _ in 0..count {
        let s = sample_haar_with(&mut rng, n)?;
        match est.eval(&s) {
            Ok(v) => m.push(v),
            Err(HaarError::Pole { .. }) | Err(HaarError::Branch(_)) => m.rejected += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(m)
}

/// Mean of `est` over `m` Haar samples in `U(n)`.
///
/// Samples are drawn in chunks of [`CHUNK`], chunk `i` from a ChaCha8
/// stream `i` of `seed`, and the chunk statistics are merged in chunk order,
/// so the result does not depend on `workers`.
pub fn mc_average(est: &Estimator, n: usize, m: usize, seed: u64, workers: usize) -> Result<MCEstimate, HaarError> {
    if m < 100 {
        return Err(HaarError::Precondition(format!("need at least 100 samples, got {m}")));
    }
    let chunks: Vec<(usize, usize)> =
        (0..m.div_ceil(CHUNK)).map(|i| (i, CHUNK.min(m - i * CHUNK))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| HaarError::Precondition(e.to_string()))?;
    let parts: Vec<Result<Moments, HaarError>> =
        pool.install(|| chunks.par_iter().map(|&(i, c)| chunk(est, n, seed, i, c)).collect());
    let mut total = Moments::default();
    for p in parts {
        total = total.merge(p?);
    }
    let (sd_re, sd_im) = if total.n > 1 {
        let d = (total.n - 1) as f64;
        ((total.m2_re / d).sqrt(), (total.m2_im / d).sqrt())
    } else {
        (0.0, 0.0)
    };
    Ok(MCEstimate {
        mean: total.mean,
        stderr: sd_re.max(sd_im) / (total.n.max(1) as f64).sqrt(),
        samples: total.n,
        rejected: total.rejected,
        seed,
    })
}

/// One CSV row of Monte Carlo output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct McRow {
    /// Matrix size.
    pub N: usize,
    /// Requested samples.
    pub M: usize,
    /// Seed.
    pub seed: u64,
    /// Real part of the mean.
    pub mean_re: f64,
    /// Imaginary part of the mean.
    pub mean_im: f64,
    /// Standard error.
    pub stderr: f64,
}

impl McRow {
    /// Row for an estimate.
    pub fn new(n: usize, m: usize, est: &MCEstimate) -> Self {
        McRow { N: n, M: m, seed: est.seed, mean_re: est.mean.re, mean_im: est.mean.im, stderr: est.stderr }
    }
}

/// Writes rows with a header line.
pub fn write_csv<W: Write>(out: W, rows: &[McRow]) -> Result<(), HaarError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| HaarError::Output(e.to_string()))?;
    }
    w.flush().map_err(|e| HaarError::Output(e.to_string()))
}
