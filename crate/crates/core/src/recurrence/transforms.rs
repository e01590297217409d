//! Binomial transforms between the `a`/`c` and `b`/`d` families, polynomiality in the number
//! of fixed points, and Lassalle's two relations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Engine;
use crate::error::{Error, Result};
use crate::numbers::binomial;
use crate::partition::Partition;
use crate::poly::Polynomial;

/// Solves `lhs(ρ̄ ∪ 1^m) = Σ_{i ≤ m} C(m, i) x(ρ̄ ∪ 1^i)` for `x(ρ)`, where `m = m_1(ρ)`.
/// `known` must return `x` on partitions with fewer ones.
pub(super) fn triangular_solve(
    rho: &Partition,
    lhs: impl Fn(&Partition) -> BigInt,
    known: impl Fn(&Partition) -> BigInt,
) -> BigInt {
    let (bar, m) = rho.strip_ones();
    let mut v = lhs(rho);
    for i in 0..m {
        v -= binomial(m, i) * known(&bar.with_ones(i));
    }
    v
}

/// `a^k_ρ = Σ_i c^k_{ρ̄ ∪ 1^i} C(m_1(ρ), i)`.
pub fn a_from_c(engine: &Engine, k: usize, rho: &Partition) -> BigInt {
    let (bar, m) = rho.strip_ones();
    (0..=m)
        .map(|i| binomial(m, i) * engine.c_coeff(k, &bar.with_ones(i)))
        .sum()
}

/// Inverse of [`a_from_c`]: recovers `c^k_λ` from the `a` table alone.
pub fn c_from_a(engine: &Engine, k: usize, lambda: &Partition) -> BigInt {
    let (bar, m) = lambda.strip_ones();
    let mut c: Vec<BigInt> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let p = bar.with_ones(j);
        let v = triangular_solve(&p, |q| engine.a_coeff(k, q), |q| c[q.ones_count()].clone());
        c.push(v);
    }
    c.pop().expect("m + 1 entries")
}

/// `b^k_ρ = Σ_i d^k_{ρ̄ ∪ 1^i} C(m_1(ρ), i)`.
pub fn b_from_d(engine: &Engine, k: usize, rho: &Partition) -> BigInt {
    let (bar, m) = rho.strip_ones();
    (0..=m)
        .map(|i| binomial(m, i) * engine.d_coeff(k, &bar.with_ones(i)))
        .sum()
}

/// `t ↦ a^k_{ρ ∪ 1^t} = Σ_i c^k_{ρ ∪ 1^i} C(t, i)` in the monomial basis.
pub fn polynomial_in_t(engine: &Engine, k: usize, rho: &Partition) -> Result<Polynomial> {
    if rho.contains_part(1) {
        return Err(Error::InvalidInput(format!(
            "{rho} has a part equal to 1"
        )));
    }
    let Some(top) = k.checked_sub(rho.rank()) else {
        return Ok(Polynomial::zero());
    };
    let mut out = Polynomial::zero();
    for i in 0..=top {
        let c = engine.c_coeff(k, &rho.with_ones(i));
        if !c.is_zero() {
            out = out.add(&Polynomial::binomial_basis(i).scale(&BigRational::from_integer(c)));
        }
    }
    Ok(out)
}

/// Checks both of Lassalle's relations for `(k, ρ)`, `k ≥ 1`, on values from `engine`.
/// Sums run over part indices, not over distinct parts.
pub fn lassalle_identity_check(engine: &Engine, k: usize, rho: &Partition) -> bool {
    assert!(k >= 1, "Lassalle's relations need k ≥ 1");
    let parts = rho.parts();
    let a = |k: usize, p: &Partition| engine.a_coeff(k, p);
    let without = |idx: &[usize]| -> Vec<usize> {
        parts
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(_, &x)| x)
            .collect()
    };
    let build = |base: Vec<usize>, extra: &[usize]| {
        let mut v = base;
        v.extend_from_slice(extra);
        Partition::from_unsorted(v).expect("positive parts")
    };

    let grown = |i: usize| build(without(&[i]), &[parts[i] + 1]);

    let lhs1 = a(k, &build(parts.to_vec(), &[1]));
    let mut rhs1 = a(k, rho);
    for i in 0..parts.len() {
        rhs1 += BigInt::from(parts[i]) * a(k - 1, &grown(i));
    }

    let mut lhs2 = BigInt::zero();
    for i in 0..parts.len() {
        lhs2 += BigInt::from(parts[i]) * a(k, &grown(i));
    }
    let mut rhs2 = BigInt::zero();
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            if i != j {
                let p = build(without(&[i, j]), &[parts[i] + parts[j] + 1]);
                rhs2 += BigInt::from(parts[i] * parts[j]) * a(k - 1, &p);
            }
        }
        for r in 1..=parts[i] {
            let p = build(without(&[i]), &[r, parts[i] + 1 - r]);
            rhs2 += BigInt::from(parts[i]) * a(k - 1, &p);
        }
    }
    lhs1 == rhs1 && lhs2 == rhs2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transform_examples() {
        let e = Engine::new();
        assert_eq!(a_from_c(&e, 3, &p(&[2, 1, 1])), BigInt::from(10));
        assert_eq!(c_from_a(&e, 3, &p(&[2, 1])), BigInt::from(4));
        assert_eq!(a_from_c(&e, 4, &p(&[3, 2])), e.c_coeff(4, &p(&[3, 2])));
    }

    #[test]
    fn polynomial_examples() {
        let e = Engine::new();
        let poly = polynomial_in_t(&e, 3, &p(&[2])).unwrap();
        let vals: Vec<_> = (0..4).map(|t| poly.eval_int(t)).collect();
        let want: Vec<_> = [1, 5, 10, 16]
            .into_iter()
            .map(|v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        assert_eq!(vals, want);
        assert_eq!(poly.degree(), Some(2));
        let two = polynomial_in_t(&e, 2, &p(&[3])).unwrap();
        assert_eq!(two, Polynomial::constant(BigRational::from_integer(BigInt::from(2))));
        assert!(polynomial_in_t(&e, 2, &p(&[2, 1])).is_err());
        assert!(polynomial_in_t(&e, 1, &p(&[4])).unwrap().is_zero());
    }

    #[test]
    fn lassalle_small() {
        let e = Engine::new();
        assert!(lassalle_identity_check(&e, 1, &p(&[1])));
        assert!(lassalle_identity_check(&e, 2, &p(&[2])));
        assert!(lassalle_identity_check(&e, 4, &p(&[3, 1])));
        assert!(lassalle_identity_check(&e, 1, &Partition::empty()));
    }
}
