use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::HaarError;

/// Distance to an eigenvalue below which derivative evaluation fails.
pub const POLE_RADIUS: f64 = 1e-9;

/// Spectrum of a unitary matrix `g ∈ U(N)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitarySample {
    /// Eigenvalues `ρ_1, ..., ρ_N`.
    pub eigenvalues: Vec<Complex64>,
    /// `det g`.
    pub det_phase: Complex64,
}

/// A Haar-distributed spectrum in `U(N)` from a fixed seed.
pub fn sample_haar(n: usize, seed: u64) -> Result<UnitarySample, HaarError> {
    sample_haar_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

/// A Haar-distributed spectrum drawn from `rng`: QR of a complex Ginibre
/// matrix with the phases of `R`'s diagonal moved into `Q`.
pub fn sample_haar_with<R: Rng>(rng: &mut R, n: usize) -> Result<UnitarySample, HaarError> {
    if n == 0 {
        return Err(HaarError::Precondition("N must be at least 1".into()));
    }
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let z = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let (mut q, r) = z.qr().unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    let (_, t) = q.schur().unpack();
    let eigenvalues: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    let det_phase = eigenvalues.iter().product();
    Ok(UnitarySample { eigenvalues, det_phase })
}

fn fmt(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

impl UnitarySample {
    /// Builds a sample from a given spectrum.
    pub fn from_eigenvalues(eigenvalues: Vec<Complex64>) -> Self {
        let det_phase = eigenvalues.iter().product();
        UnitarySample { eigenvalues, det_phase }
    }

    /// Matrix size `N`.
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Spectrum of `g^{-1}`.
    pub fn inverse(&self) -> UnitarySample {
        UnitarySample::from_eigenvalues(self.eigenvalues.iter().map(|r| r.conj()).collect())
    }

    /// `p_k(ℛ(g)) = Σ ρ^k`.
    pub fn power_sum(&self, k: u32) -> Complex64 {
        self.eigenvalues.iter().map(|r| r.powu(k)).sum()
    }

    /// `χ_g(z) = det(I - z g^{-1}) = ∏ (1 - z ρ̄)`.
    pub fn char_poly(&self, z: Complex64) -> Complex64 {
        self.eigenvalues.iter().map(|r| 1.0 - z * r.conj()).product()
    }

    /// `χ_{g^{-1}}(z) = ∏ (1 - z ρ)`.
    pub fn char_poly_inv(&self, z: Complex64) -> Complex64 {
        self.eigenvalues.iter().map(|r| 1.0 - z * r).product()
    }

    /// `χ_g'(z) / χ_g(z) = Σ -ρ̄ / (1 - z ρ̄)`.
    pub fn log_deriv(&self, z: Complex64) -> Result<Complex64, HaarError> {
        let mut total = Complex64::new(0.0, 0.0);
        for r in &self.eigenvalues {
            if (z - r).norm() < POLE_RADIUS {
                return Err(HaarError::Pole { z: fmt(z), radius: POLE_RADIUS });
            }
            let rb = r.conj();
            total -= rb / (1.0 - z * rb);
        }
        Ok(total)
    }

    /// `χ_{g^{-1}}'(z) / χ_{g^{-1}}(z)`.
    pub fn log_deriv_inv(&self, z: Complex64) -> Result<Complex64, HaarError> {
        self.inverse().log_deriv(z)
    }

    /// `z Λ_g'(z) / Λ_g(z) = -N/2 + z χ_g'(z) / χ_g(z)`.
    pub fn completed_log_deriv(&self, z: Complex64) -> Result<Complex64, HaarError> {
        Ok(z * self.log_deriv(z)? - self.n() as f64 / 2.0)
    }

    /// `det(-g)`.
    pub fn det_neg(&self) -> Complex64 {
        if self.n() % 2 == 0 {
            self.det_phase
        } else {
            -self.det_phase
        }
    }

    /// `Λ_g(z) = det(-g)^{1/2} z^{-N/2} χ_g(z)` with principal branches.
    pub fn completed_char_poly(&self, z: Complex64) -> Result<Complex64, HaarError> {
        let d = self.det_neg();
        if (d + 1.0).norm() < POLE_RADIUS {
            return Err(HaarError::Branch("det(-g) = -1".into()));
        }
        if z.im == 0.0 && z.re <= 0.0 {
            return Err(HaarError::Branch(format!("z = {} lies on the negative real axis", fmt(z))));
        }
        Ok(d.sqrt() * z.powf(-(self.n() as f64) / 2.0) * self.char_poly(z))
    }
}
