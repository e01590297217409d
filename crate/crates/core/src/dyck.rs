//! Dyck-path areas and the leading and subleading terms of the `b` coefficients.
//!
//! The area of a path is the sum of its heights over all lattice points, so `UD` has area 1
//! and the two paths of length 4 have areas 2 and 4.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::Result;
use crate::numbers::{binomial, catalan};
use crate::partition::{Partition, WeakComposition};
use crate::symfunc::guard;

/// Largest semi-length the brute-force enumeration accepts.
pub const MAX_BRUTEFORCE_K: usize = 14;

/// `𝔄_k = 4^k - C(2k+1, k)`, the total area of the Dyck paths of length `2k`.
pub fn dyck_area_closed(k: usize) -> BigInt {
    BigInt::from(4u32).pow(k) - binomial(2 * k + 1, k)
}

/// `(number of paths, total area)` over all Dyck paths of length `2k`, by explicit enumeration.
pub fn dyck_paths_bruteforce(k: usize) -> Result<(u64, u64)> {
    guard("k", k, MAX_BRUTEFORCE_K)?;
    let mut count = 0u64;
    let mut total = 0u64;
    // (steps taken, current height, area so far)
    let mut stack = vec![(0usize, 0usize, 0u64)];
    while let Some((steps, height, area)) = stack.pop() {
        if steps == 2 * k {
            count += 1;
            total += area;
            continue;
        }
        let remaining = 2 * k - steps;
        if height < remaining - 1 {
            stack.push((steps + 1, height + 1, area + height as u64 + 1));
        }
        if height > 0 {
            stack.push((steps + 1, height - 1, area + height as u64 - 1));
        }
    }
    Ok((count, total))
}

/// Total area of the Dyck paths of length `2k`, by enumeration.
pub fn dyck_area_bruteforce(k: usize) -> Result<BigInt> {
    Ok(BigInt::from(dyck_paths_bruteforce(k)?.1))
}

/// `𝔄_I = Σ_j 𝔄_{i_j} ∏_{l ≠ j} Cat_{i_l}`: total area over tuples of Dyck paths of
/// semi-lengths `i_1, ..., i_r`.
pub fn composition_area(composition: &WeakComposition) -> BigInt {
    let e = composition.entries();
    (0..e.len())
        .map(|j| {
            e.iter()
                .enumerate()
                .map(|(l, &i)| if l == j { dyck_area_closed(i) } else { catalan(i) })
                .product::<BigInt>()
        })
        .sum()
}

/// `𝔄_{m-1} = (m-1) Cat_{m-1} + Σ_{r+s=m} (𝔄_{r-1} Cat_{s-1} + 𝔄_{s-1} Cat_{r-1})`.
pub fn lemma_area_check(m: usize) -> bool {
    assert!(m >= 1, "the area lemma needs m ≥ 1");
    let mut rhs = BigInt::from(m - 1) * catalan(m - 1);
    for r in 1..m {
        let s = m - r;
        rhs += dyck_area_closed(r - 1) * catalan(s - 1) + dyck_area_closed(s - 1) * catalan(r - 1);
    }
    dyck_area_closed(m - 1) == rhs
}

/// `∏ Cat_{ρ_i - 1}`, the value of `b^k_ρ` at `k = |ρ| - ℓ(ρ)`.
pub fn leading_b(rho: &Partition) -> BigInt {
    rho.parts().iter().map(|&p| catalan(p - 1)).fold(BigInt::one(), |a, b| a * b)
}

/// `𝔄_{μ - 1}`, the value of `b^k_μ` at `k = |μ| - ℓ(μ) + 1`.
pub fn subleading_b(mu: &Partition) -> BigInt {
    composition_area(&mu.minus_ones())
}
