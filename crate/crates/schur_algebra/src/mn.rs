use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use partition_core::{parity_sign, ribbons_added, ribbons_removed, Partition};

use crate::{PowerSumExpansion, SchurExpansion};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p_k · f` by the Murnaghan-Nakayama rule: each `s_μ` becomes
/// `Σ (-1)^{ht} s_λ` over `k`-ribbons `λ ∖ μ`.
pub fn mn_multiply(k: usize, f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, c) in f.iter() {
        for step in ribbons_added(mu, k, None) {
            out.add_term(step.to, c * int(parity_sign(step.height) as i64));
        }
    }
    out
}

/// `k ∂/∂p_k f` by the dual rule: each `s_λ` becomes `Σ (-1)^{ht} s_μ`
/// over `k`-ribbons `λ ∖ μ`.
pub fn mn_derive(k: usize, f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lam, c) in f.iter() {
        for step in ribbons_removed(lam, k) {
            out.add_term(step.from, c * int(parity_sign(step.height) as i64));
        }
    }
    out
}

/// Hall inner product, for which the Schur functions are orthonormal.
pub fn hall_inner(f: &SchurExpansion, g: &SchurExpansion) -> BigRational {
    f.iter().map(|(p, c)| c * g.coeff(p)).fold(BigRational::zero(), |a, b| a + b)
}

/// Hall inner product in power sums, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn powersum_inner(f: &PowerSumExpansion, g: &PowerSumExpansion) -> BigRational {
    f.iter()
        .map(|(p, c)| c * g.coeff(p) * p.z_stat())
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `∂/∂p_μ p_ν = ∏_i m_i(ν)! / m_i(ν ∖ μ)! · p_{ν ∖ μ}`, or `None` when
/// `μ` is not a sub-multiset of `ν`.
pub fn powersum_reduce(mu: &Partition, nu: &Partition) -> Option<(BigRational, Partition)> {
    let rest = nu.multiset_minus(mu)?;
    let mut c = BigInt::one();
    for (i, m) in nu.multiplicities() {
        let r = rest.multiplicity(i);
        for j in (r + 1)..=m {
            c *= BigInt::from(j);
        }
    }
    Some((BigRational::from_integer(c), rest))
}

/// Power-sum coordinates of `f`, found by applying `mn_derive` for the
/// parts of each `ρ` from the largest down and reading the constant term:
/// the coefficient of `p_ρ` is `[s_∅](∏ ρ_i ∂/∂p_{ρ_i}) f / z_ρ`.
pub fn schur_to_powersum(f: &SchurExpansion) -> PowerSumExpansion {
    fn rec(g: &SchurExpansion, rho: &mut Vec<usize>, bound: usize, out: &mut PowerSumExpansion) {
        let r = Partition::new(rho.clone()).expect("parts added in decreasing order");
        let constant = g.coeff(&Partition::empty());
        if !constant.is_zero() {
            out.add_term(r.clone(), constant / r.z_stat());
        }
        for k in (1..=bound).rev() {
            let d = mn_derive(k, g);
            if d.is_zero() {
                continue;
            }
            rho.push(k);
            rec(&d, rho, k, out);
            rho.pop();
        }
    }
    let bound = f.iter().map(|(p, _)| p.size()).max().unwrap_or(0);
    let mut out = PowerSumExpansion::zero();
    rec(f, &mut Vec::new(), bound, &mut out);
    out
}

/// Schur coordinates of a power-sum combination, by repeated `mn_multiply`.
pub fn powersum_to_schur(f: &PowerSumExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (rho, c) in f.iter() {
        let mut g = SchurExpansion::basis(Partition::empty());
        for &k in rho.parts() {
            g = mn_multiply(k, &g);
        }
        out.add_assign(&g.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn s(v: &[usize]) -> SchurExpansion {
        SchurExpansion::basis(p(v))
    }

    #[test]
    fn multiply_example() {
        let got = mn_multiply(2, &s(&[1]));
        let mut want = s(&[3]);
        want.add_term(p(&[1, 1, 1]), q(-1, 1));
        assert_eq!(got, want);
    }

    #[test]
    fn derive_example() {
        assert_eq!(mn_derive(2, &s(&[3])), s(&[1]));
        assert!(mn_derive(2, &s(&[1])).is_zero());
        assert_eq!(mn_derive(2, &s(&[2, 1])), SchurExpansion::zero());
        assert_eq!(mn_derive(2, &s(&[2, 2])), {
            let mut e = SchurExpansion::zero();
            e.add_term(p(&[2]), q(1, 1));
            e.add_term(p(&[1, 1]), q(-1, 1));
            e
        });
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(powersum_reduce(&p(&[2]), &p(&[2, 2])), Some((q(2, 1), p(&[2]))));
        assert_eq!(powersum_reduce(&p(&[3]), &p(&[2])), None);
        assert_eq!(powersum_reduce(&Partition::empty(), &p(&[4, 1])), Some((q(1, 1), p(&[4, 1]))));
        assert_eq!(powersum_reduce(&p(&[1, 1]), &p(&[2, 1, 1, 1])), Some((q(6, 1), p(&[2, 1]))));
    }

    #[test]
    fn known_characters() {
        let f = schur_to_powersum(&s(&[2, 1]));
        let mut want = PowerSumExpansion::term(p(&[1, 1, 1]), q(1, 3));
        want.add_term(p(&[3]), q(-1, 3));
        assert_eq!(f, want);
        let g = schur_to_powersum(&s(&[1, 1]));
        let mut want = PowerSumExpansion::term(p(&[1, 1]), q(1, 2));
        want.add_term(p(&[2]), q(-1, 2));
        assert_eq!(g, want);
        assert_eq!(schur_to_powersum(&s(&[])), PowerSumExpansion::basis(Partition::empty()));
    }

    #[test]
    fn conversions_roundtrip_and_orthogonality() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                let ps = schur_to_powersum(&s(lam.parts()));
                assert_eq!(powersum_to_schur(&ps), s(lam.parts()));
                for mu in partitions_of(n) {
                    let pm = schur_to_powersum(&s(mu.parts()));
                    let want = if lam == mu { q(1, 1) } else { q(0, 1) };
                    assert_eq!(powersum_inner(&ps, &pm), want);
                }
            }
        }
    }
}
