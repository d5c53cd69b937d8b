use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{HaarError, UnitarySample};

/// Named functionals of a unitary spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Estimator {
    /// The constant 1.
    One,
    /// `tr g = p_1(ℛ(g))`.
    Trace,
    /// `|tr g|²`.
    AbsTraceSq,
    /// `p_k(ℛ(g))`.
    PowerSum {
        /// Exponent.
        k: u32,
    },
    /// `|χ_g(z)|²` at a real point.
    AbsCharSq {
        /// Evaluation point.
        z: f64,
    },
    /// `ε χ_g'(ε)/χ_g(ε) · φ χ_{g^{-1}}'(φ)/χ_{g^{-1}}(φ)`.
    LogderPair {
        /// Point for `g`.
        eps: f64,
        /// Point for `g^{-1}`.
        phi: f64,
    },
    /// `ε Λ_g'(ε)/Λ_g(ε) · φ Λ_{g^{-1}}'(φ)/Λ_{g^{-1}}(φ)`.
    CompletedPair {
        /// Point for `g`.
        eps: f64,
        /// Point for `g^{-1}`.
        phi: f64,
    },
    /// `χ_g(α) χ_{g^{-1}}(β) / (χ_g(δ) χ_{g^{-1}}(γ))`.
    Ratio {
        /// Numerator point of `χ_g`.
        alpha: Complex64,
        /// Numerator point of `χ_{g^{-1}}`.
        beta: Complex64,
        /// Denominator point of `χ_{g^{-1}}`.
        gamma: Complex64,
        /// Denominator point of `χ_g`.
        delta: Complex64,
    },
    /// `Σ_j 1 / (c - ρ_j)`.
    EigenSumRational {
        /// Pole.
        c: f64,
    },
}

fn guard(v: Complex64, what: &str) -> Result<Complex64, HaarError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(HaarError::Pole { z: what.to_string(), radius: 0.0 })
    }
}

impl Estimator {
    /// Evaluates the functional on one spectrum.
    pub fn eval(&self, s: &UnitarySample) -> Result<Complex64, HaarError> {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Estimator::One => Ok(one),
            Estimator::Trace => Ok(s.power_sum(1)),
            Estimator::AbsTraceSq => Ok(Complex64::new(s.power_sum(1).norm_sqr(), 0.0)),
            Estimator::PowerSum { k } => Ok(s.power_sum(k)),
            Estimator::AbsCharSq { z } => Ok(Complex64::new(s.char_poly(Complex64::new(z, 0.0)).norm_sqr(), 0.0)),
            Estimator::LogderPair { eps, phi } => {
                let (e, p) = (Complex64::new(eps, 0.0), Complex64::new(phi, 0.0));
                Ok(e * s.log_deriv(e)? * p * s.log_deriv_inv(p)?)
            }
            Estimator::CompletedPair { eps, phi } => {
                let (e, p) = (Complex64::new(eps, 0.0), Complex64::new(phi, 0.0));
                if (s.det_neg() + 1.0).norm() < crate::POLE_RADIUS {
                    return Err(HaarError::Branch("det(-g) = -1".into()));
                }
                Ok(s.completed_log_deriv(e)? * s.inverse().completed_log_deriv(p)?)
            }
            Estimator::Ratio { alpha, beta, gamma, delta } => {
                let num = s.char_poly(alpha) * s.char_poly_inv(beta);
                let den = s.char_poly(delta) * s.char_poly_inv(gamma);
                if den.norm() < crate::POLE_RADIUS {
                    return Err(HaarError::Pole { z: "ratio denominator".into(), radius: crate::POLE_RADIUS });
                }
                guard(num / den, "ratio")
            }
            Estimator::EigenSumRational { c } => {
                let c = Complex64::new(c, 0.0);
                let mut total = Complex64::new(0.0, 0.0);
                for r in &s.eigenvalues {
                    if (c - r).norm() < crate::POLE_RADIUS {
                        return Err(HaarError::Pole { z: format!("{c}"), radius: crate::POLE_RADIUS });
                    }
                    total += one / (c - r);
                }
                Ok(total)
            }
        }
    }
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Estimator::One => write!(f, "one"),
            Estimator::Trace => write!(f, "trace"),
            Estimator::AbsTraceSq => write!(f, "abs_trace_sq"),
            Estimator::PowerSum { k } => write!(f, "power_sum@{k}"),
            Estimator::AbsCharSq { z } => write!(f, "abs_char_sq@{z}"),
            Estimator::LogderPair { eps, phi } => write!(f, "logder_pair@{eps},{phi}"),
            Estimator::CompletedPair { eps, phi } => write!(f, "completed_pair@{eps},{phi}"),
            Estimator::Ratio { alpha, beta, gamma, delta } => {
                write!(f, "ratio@{alpha},{beta},{gamma},{delta}")
            }
            Estimator::EigenSumRational { c } => write!(f, "eigen_sum_rational@{c}"),
        }
    }
}

impl FromStr for Estimator {
    type Err = String;

    /// Keys `name` or `name@p1,p2,...`; complex parameters accept `re+imj`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once('@') {
            Some((n, p)) => (n, p.split(',').map(str::trim).collect::<Vec<_>>()),
            None => (s, Vec::new()),
        };
        let real = |i: usize, default: f64| -> Result<f64, String> {
            match params.get(i) {
                Some(p) => p.parse().map_err(|_| format!("bad parameter {p:?} for {name}")),
                None => Ok(default),
            }
        };
        let cplx = |i: usize| -> Result<Complex64, String> {
            let p = params.get(i).ok_or_else(|| format!("{name} needs 4 parameters"))?;
            p.replace('j', "i").parse::<Complex64>().map_err(|_| format!("bad complex parameter {p:?}"))
        };
        match name {
            "one" => Ok(Estimator::One),
            "trace" => Ok(Estimator::Trace),
            "abs_trace_sq" => Ok(Estimator::AbsTraceSq),
            "power_sum" => Ok(Estimator::PowerSum { k: real(0, 1.0)? as u32 }),
            "abs_char_sq" => Ok(Estimator::AbsCharSq { z: real(0, 1.0)? }),
            "logder_pair" => Ok(Estimator::LogderPair { eps: real(0, 0.3)?, phi: real(1, 0.3)? }),
            "completed_pair" => Ok(Estimator::CompletedPair { eps: real(0, 0.3)?, phi: real(1, 0.3)? }),
            "ratio" => Ok(Estimator::Ratio { alpha: cplx(0)?, beta: cplx(1)?, gamma: cplx(2)?, delta: cplx(3)? }),
            "eigen_sum_rational" => Ok(Estimator::EigenSumRational { c: real(0, 2.0)? }),
            other => Err(format!("unknown estimator {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for key in ["one", "trace", "abs_trace_sq", "power_sum@3", "abs_char_sq@1", "logder_pair@0.3,0.2", "eigen_sum_rational@2"] {
            let e: Estimator = key.parse().unwrap();
            assert_eq!(e.to_string(), key);
            assert_eq!(e.to_string().parse::<Estimator>().unwrap(), e);
        }
        let r: Estimator = "ratio@0.5+0.1j,0.3,0.2-0.2j,0.1".parse().unwrap();
        assert_eq!(r.to_string().parse::<Estimator>().unwrap(), r);
        assert!("nope".parse::<Estimator>().is_err());
    }
}
