//! The α-deformation `a^{k,(α)}_μ`, defined by `h_k(A_λ^{(α)}) = Σ_μ a^{k,(α)}_μ θ^{(α)}_μ(λ)`
//! where `A_λ^{(α)}` is the multiset of α-contents of `λ` and `θ^{(α)}_μ(λ)` is the coefficient
//! of `p_μ` in `J_λ^{(α)}`.
//!
//! At α = 1 this gives `a^k_μ` and at α = 2 it gives `b^k_μ`. Everything is computed at fixed
//! rational samples of α.

mod jack;
mod linalg;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::symgroup::OracleLimits;

pub use jack::{
    alpha_scalar_product, jack_in_power_basis, jack_polynomials, power_norm, SymFuncInPowerBasis,
};
pub use linalg::Matrix;

/// `α(j-1) - (i-1)` for every box `(i, j)` of `λ`, row by row.
pub fn alpha_contents(lambda: &Partition, alpha: &BigRational) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(lambda.size());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            out.push(alpha * BigInt::from(j) - BigInt::from(i));
        }
    }
    out
}

/// `h_k` evaluated on a finite multiset.
pub fn complete_homogeneous(values: &[BigRational], k: usize) -> BigRational {
    let mut h = vec![BigRational::zero(); k + 1];
    h[0] = BigRational::one();
    for x in values {
        for j in 1..=k {
            let add = x * &h[j - 1];
            h[j] += add;
        }
    }
    h.swap_remove(k)
}

/// `θ^{(α)}_μ(λ)` for all `μ, λ ⊢ n`, with the inverse of the system it defines.
#[derive(Clone, Debug)]
pub struct ThetaMatrix {
    alpha: BigRational,
    partitions: Vec<Partition>,
    /// `entries[i][j] = θ_{μ_i}(λ_j)`.
    entries: Matrix,
    /// Inverse of the transpose, so that `a = solver · h`.
    solver: Matrix,
}

impl ThetaMatrix {
    pub fn new(n: usize, alpha: &BigRational, limits: &OracleLimits) -> Result<ThetaMatrix> {
        let jacks = jack_polynomials(n, alpha, limits)?;
        let partitions: Vec<Partition> = jacks.iter().map(|(l, _)| l.clone()).collect();
        let entries: Matrix = partitions
            .iter()
            .map(|mu| jacks.iter().map(|(_, j)| j.coefficient(mu)).collect())
            .collect();
        let transpose: Matrix = (0..partitions.len())
            .map(|j| entries.iter().map(|row| row[j].clone()).collect())
            .collect();
        let solver = linalg::inverse(&transpose).ok_or_else(|| Error::SingularTheta {
            alpha: alpha.to_string(),
        })?;
        Ok(ThetaMatrix {
            alpha: alpha.clone(),
            partitions,
            entries,
            solver,
        })
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// Partitions of `n` in increasing lexicographic order, indexing both axes.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn theta(&self, mu: &Partition, lambda: &Partition) -> BigRational {
        let pos = |p: &Partition| self.partitions.iter().position(|q| q == p);
        match (pos(mu), pos(lambda)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigRational::zero(),
        }
    }

    /// The coefficients `x_μ` with `Σ_μ x_μ θ_μ(λ) = f(λ)` for every `λ`.
    pub fn solve(&self, f: impl Fn(&Partition) -> BigRational) -> BTreeMap<Partition, BigRational> {
        let rhs: Vec<BigRational> = self.partitions.iter().map(f).collect();
        let x = linalg::mat_vec(&self.solver, &rhs);
        self.partitions.iter().cloned().zip(x).collect()
    }

    /// `a^{k,(α)}_μ` for every `μ ⊢ n`.
    pub fn a_alpha(&self, k: usize) -> BTreeMap<Partition, BigRational> {
        self.solve(|lam| complete_homogeneous(&alpha_contents(lam, &self.alpha), k))
    }
}

/// `a^{k,(α)}_μ` for every `μ ⊢ n`.
pub fn a_alpha(
    k: usize,
    n: usize,
    alpha: &BigRational,
    limits: &OracleLimits,
) -> Result<BTreeMap<Partition, BigRational>> {
    Ok(ThetaMatrix::new(n, alpha, limits)?.a_alpha(k))
}

/// One instance of the conjectured relation, both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureInstance {
    pub alpha: BigRational,
    pub n: usize,
    pub k: usize,
    pub rho: Partition,
    pub m: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

/// The six default sample values of α.
pub fn default_alphas() -> Vec<BigRational> {
    [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1), (5, 1)]
        .iter()
        .map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect()
}

/// Checks, for each sample α, each `n ≤ n_max`, `1 ≤ k ≤ k_max` and each way of writing a
/// partition `μ ⊢ n` as `ρ ∪ (m)` with `m ≥ 2`,
///
/// `a^{k}_{ρ∪m} = Σ_{r+s=m} a^{k-1}_{ρ∪(r,s)} + α Σ_i ρ_i a^{k-1}_{ρ∖ρ_i∪(ρ_i+m)} + (α-1)(m-1) a^{k-1}_{ρ∪m}`.
pub fn conjecture_check(
    k_max: usize,
    n_max: usize,
    alphas: &[BigRational],
    limits: &OracleLimits,
) -> Result<Vec<ConjectureInstance>> {
    let mut out = Vec::new();
    for alpha in alphas {
        for n in 2..=n_max {
            let theta = ThetaMatrix::new(n, alpha, limits)?;
            let tables: Vec<_> = (0..=k_max).map(|k| theta.a_alpha(k)).collect();
            for k in 1..=k_max {
                let prev = &tables[k - 1];
                let at = |p: &Partition| prev.get(p).cloned().unwrap_or_else(BigRational::zero);
                for mu in theta.partitions() {
                    for (m, _) in mu.grouped() {
                        if m < 2 {
                            continue;
                        }
                        let rho = mu.remove_part(m)?;
                        let mut rhs = BigRational::zero();
                        for r in 1..m {
                            rhs += at(&rho.inserted(&[r, m - r]));
                        }
                        for (part, mult) in rho.grouped() {
                            let w = alpha * BigInt::from(part * mult);
                            rhs += w * at(&rho.replace_part(part, part + m));
                        }
                        rhs += (alpha - BigInt::one()) * BigInt::from(m - 1) * at(mu);
                        let lhs = tables[k][mu].clone();
                        out.push(ConjectureInstance {
                            alpha: alpha.clone(),
                            n,
                            k,
                            rho,
                            m,
                            pass: lhs == rhs,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Polynomial in α through the sampled values of `a^{k,(α)}_μ`. Purely empirical: nothing says
/// the coefficient is polynomial in α, so the fit is only meaningful when more samples are given
/// than its degree needs.
pub fn interpolate_in_alpha(
    k: usize,
    mu: &Partition,
    alphas: &[BigRational],
    limits: &OracleLimits,
) -> Result<Polynomial> {
    let mut points = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        if points.iter().any(|(a, _): &(BigRational, BigRational)| a == alpha) {
            return Err(Error::InvalidInput(format!("repeated α sample {alpha}")));
        }
        let table = a_alpha(k, mu.size(), alpha, limits)?;
        points.push((alpha.clone(), table.get(mu).cloned().unwrap_or_else(BigRational::zero)));
    }
    Ok(Polynomial::interpolate(&points))
}
