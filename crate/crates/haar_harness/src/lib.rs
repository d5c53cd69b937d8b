//! Haar-distributed unitary spectra, characteristic polynomial functionals,
//! deterministic parallel Monte Carlo averages and a small-`N` quadrature
//! over the Weyl density.

mod error;
mod estimator;
mod mc;
mod sample;
mod weyl;

pub use error::HaarError;
pub use estimator::Estimator;
pub use mc::{mc_average, write_csv, McRow, MCEstimate, CHUNK};
pub use sample::{sample_haar, sample_haar_with, UnitarySample, POLE_RADIUS};
pub use weyl::{weyl_quadrature, WEYL_TOL};
