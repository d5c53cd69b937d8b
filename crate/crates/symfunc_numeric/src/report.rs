use serde::{Deserialize, Serialize};

/// Outcome of a numerical identity suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Name of the identity checked.
    pub identity: String,
    /// Seed used for random instances.
    pub seed: u64,
    /// Number of instances evaluated.
    pub instances: usize,
    /// Worst relative error seen.
    pub max_rel_err: f64,
    /// Whether every instance met the tolerance.
    pub pass: bool,
}

impl VerificationReport {
    /// Builds a report from the worst error and a tolerance.
    pub fn new(identity: &str, seed: u64, instances: usize, max_rel_err: f64, tol: f64) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            seed,
            instances,
            max_rel_err,
            pass: max_rel_err <= tol && max_rel_err.is_finite(),
        }
    }
}
