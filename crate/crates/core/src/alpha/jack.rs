//! Jack polynomials `J_λ^{(α)}` in the power-sum basis, at a rational value of `α`.
//!
//! The monomial functions are orthogonalized in increasing lexicographic order (`1^n` first)
//! for the scalar product `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{ℓ(λ)}`, then rescaled so that the
//! coefficient of `m_{1^n}` is `n!`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::linalg::{inverse, Matrix};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::factorial;
use crate::symfunc::guard;
use crate::symgroup::OracleLimits;

/// A homogeneous symmetric function of degree `n` written on the `p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFuncInPowerBasis {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFuncInPowerBasis {
    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Partitions of `n` in increasing lexicographic order.
pub(super) fn increasing(n: usize) -> Vec<Partition> {
    let mut v = partitions_of(n);
    v.reverse();
    v
}

/// Number of ways to distribute the parts of `mu` into the parts of `lambda` so that each part
/// of `lambda` is filled exactly: the coefficient of `m_λ` in `p_μ`.
fn power_to_monomial(mu: &Partition, lambda: &Partition) -> u64 {
    fn go(parts: &[usize], room: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += go(rest, room);
                room[j] += first;
            }
        }
        total
    }
    if mu.size() != lambda.size() {
        return 0;
    }
    go(mu.parts(), &mut lambda.parts().to_vec())
}

/// `z_μ α^{ℓ(μ)}`.
pub fn power_norm(mu: &Partition, alpha: &BigRational) -> BigRational {
    BigRational::from_integer(mu.centralizer_order()) * alpha.clone().pow(mu.len())
}

fn inner(basis: &[Partition], x: &[BigRational], y: &[BigRational], alpha: &BigRational) -> BigRational {
    basis
        .iter()
        .zip(x.iter().zip(y))
        .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
        .map(|(mu, (a, b))| a * b * power_norm(mu, alpha))
        .sum()
}

/// `⟨f, g⟩` for the α scalar product.
pub fn alpha_scalar_product(f: &SymFuncInPowerBasis, g: &SymFuncInPowerBasis, alpha: &BigRational) -> BigRational {
    f.coeffs
        .iter()
        .map(|(mu, a)| a * g.coefficient(mu) * power_norm(mu, alpha))
        .sum()
}

/// Every `J_λ^{(α)}`, `λ ⊢ n`, in increasing lexicographic order of `λ`.
pub fn jack_polynomials(
    n: usize,
    alpha: &BigRational,
    limits: &OracleLimits,
) -> Result<Vec<(Partition, SymFuncInPowerBasis)>> {
    guard("n", n, limits.max_jack_n)?;
    let basis = increasing(n);
    let size = basis.len();
    // p_μ = Σ_λ r[μ][λ] m_λ, so the rows of r⁻¹ are the m_λ in the p basis
    let r: Matrix = basis
        .iter()
        .map(|mu| {
            basis
                .iter()
                .map(|lam| BigRational::from_integer(BigInt::from(power_to_monomial(mu, lam))))
                .collect()
        })
        .collect();
    let m_in_p = inverse(&r).expect("the power-to-monomial matrix is triangular with nonzero diagonal");
    let degenerate = || Error::DegenerateGram {
        alpha: alpha.to_string(),
    };

    let mut done: Vec<(Vec<BigRational>, BigRational)> = Vec::with_capacity(size);
    let mut out = Vec::with_capacity(size);
    let one_n = 0; // 1^n is first in increasing order
    let n_fact = BigRational::from_integer(BigInt::from(factorial(n)));
    for (idx, lam) in basis.iter().enumerate() {
        let mut v = m_in_p[idx].clone();
        for (prev, norm) in &done {
            let f = inner(&basis, &m_in_p[idx], prev, alpha) / norm;
            if f.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(prev) {
                *a -= &f * b;
            }
        }
        let norm = inner(&basis, &v, &v, alpha);
        if norm.is_zero() {
            return Err(degenerate());
        }
        // coefficient of m_{1^n}: Σ_μ v_μ r[μ][1^n]
        let lead: BigRational = v.iter().zip(&r).map(|(x, row)| x * &row[one_n]).sum();
        if lead.is_zero() {
            return Err(degenerate());
        }
        let scale = &n_fact / lead;
        let coeffs = basis
            .iter()
            .zip(&v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (mu.clone(), c * &scale))
            .collect();
        out.push((lam.clone(), SymFuncInPowerBasis { n, coeffs }));
        done.push((v, norm));
    }
    Ok(out)
}

/// `J_λ^{(α)}` in the power-sum basis.
pub fn jack_in_power_basis(lambda: &Partition, alpha: &BigRational, limits: &OracleLimits) -> Result<SymFuncInPowerBasis> {
    let all = jack_polynomials(lambda.size(), alpha, limits)?;
    Ok(all
        .into_iter()
        .find(|(l, _)| l == lambda)
        .map(|(_, j)| j)
        .expect("λ is a partition of its size"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn power_to_monomial_small() {
        // p_1^2 = m_2 + 2 m_11, p_2 = m_2
        assert_eq!(power_to_monomial(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(power_to_monomial(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(power_to_monomial(&p(&[2]), &p(&[1, 1])), 0);
        // p_21 = m_3 + m_21
        assert_eq!(power_to_monomial(&p(&[2, 1]), &p(&[3])), 1);
        assert_eq!(power_to_monomial(&p(&[2, 1]), &p(&[2, 1])), 1);
    }

    #[test]
    fn degree_two() {
        let limits = OracleLimits::default();
        for alpha in [q(1, 2), q(1, 1), q(3, 1)] {
            let j2 = jack_in_power_basis(&p(&[2]), &alpha, &limits).unwrap();
            assert_eq!(j2.coefficient(&p(&[1, 1])), q(1, 1));
            assert_eq!(j2.coefficient(&p(&[2])), alpha);
            let j11 = jack_in_power_basis(&p(&[1, 1]), &alpha, &limits).unwrap();
            assert_eq!(j11.coefficient(&p(&[1, 1])), q(1, 1));
            assert_eq!(j11.coefficient(&p(&[2])), q(-1, 1));
        }
        let j1 = jack_in_power_basis(&p(&[1]), &q(2, 1), &limits).unwrap();
        assert_eq!(j1.coeffs.len(), 1);
        assert_eq!(j1.coefficient(&p(&[1])), q(1, 1));
    }

    /// At α = 1, `J_λ = (n! / dim λ) s_λ`; for `λ = (n)` that is `n! h_n = Σ_μ (n!/z_μ) p_μ`.
    #[test]
    fn one_row_at_alpha_one() {
        let limits = OracleLimits::default();
        for n in 1..=5 {
            let j = jack_in_power_basis(&p(&[n]), &q(1, 1), &limits).unwrap();
            for mu in partitions_of(n) {
                let want = BigRational::new(BigInt::from(factorial(n)), mu.centralizer_order());
                assert_eq!(j.coefficient(&mu), want);
            }
        }
    }

    #[test]
    fn orthogonal() {
        let limits = OracleLimits::default();
        let alpha = q(3, 2);
        for n in 1..=5 {
            let js = jack_polynomials(n, &alpha, &limits).unwrap();
            for (i, (_, a)) in js.iter().enumerate() {
                for (b_idx, (_, b)) in js.iter().enumerate() {
                    let s = alpha_scalar_product(a, b, &alpha);
                    assert_eq!(s.is_zero(), i != b_idx);
                }
            }
        }
    }

    #[test]
    fn degenerate_alpha() {
        let limits = OracleLimits::default();
        assert!(matches!(
            jack_polynomials(2, &q(0, 1), &limits),
            Err(Error::DegenerateGram { .. })
        ));
        assert!(jack_polynomials(7, &q(1, 1), &limits).is_err());
    }
}
