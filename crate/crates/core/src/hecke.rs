//! Brute-force oracle for the Hecke algebra of the Gelfand pair `(S_2n, H_n)`.
//!
//! Points are interleaved: the point `k` is index `2(k-1)` and `k̄` is index `2(k-1)+1`,
//! so the order `1 < 1̄ < 2 < 2̄ < ...` is the natural index order.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{all_permutations, factorial, Permutation};
use crate::symfunc::{apply, guard, JucysMurphyFamily, SymFunc};
use crate::symgroup::{group_by_class, OracleLimits};

/// Index of the point `k` (1-based), barred or not.
pub fn point(k: usize, barred: bool) -> usize {
    2 * (k - 1) + usize::from(barred)
}

/// Half-lengths of the cycles of the graph with solid edges `{2t, 2t+1}` and dashed edges
/// `{σ(2t), σ(2t+1)}`, sorted decreasingly.
pub fn coset_type(sigma: &Permutation) -> Partition {
    let size = sigma.size();
    assert!(size.is_multiple_of(2), "coset type needs an even ambient size");
    let inv = sigma.inverse();
    let dashed = |v: usize| sigma.apply(inv.apply(v) ^ 1);
    let mut seen = vec![false; size];
    let mut halves = Vec::new();
    for start in 0..size {
        if seen[start] {
            continue;
        }
        // alternate solid then dashed edges; every cycle closes after an even number of steps
        let mut len = 0;
        let mut v = start;
        loop {
            seen[v] = true;
            let w = v ^ 1;
            seen[w] = true;
            len += 2;
            v = dashed(w);
            if v == start {
                break;
            }
            assert!(!seen[v], "graph cycle is not alternating");
        }
        halves.push(len / 2);
    }
    Partition::from_unsorted(halves).expect("half-lengths are positive")
}

/// Whether `h` maps every pair `{2t, 2t+1}` onto a pair.
pub fn is_hyperoctahedral(h: &Permutation) -> bool {
    h.size().is_multiple_of(2) && (0..h.size() / 2).all(|t| h.apply(2 * t) ^ 1 == h.apply(2 * t + 1))
}

/// All `2^n n!` elements of `H_n`, built as signed permutations:
/// `h(2t + b) = 2π(t) + (b xor s_t)`.
pub fn hyperoctahedral_elements(n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(n) << n);
    for pi in all_permutations(n) {
        for signs in 0..1usize << n {
            let images = (0..2 * n)
                .map(|x| {
                    let (t, b) = (x / 2, x % 2);
                    2 * pi.apply(t) + (b ^ ((signs >> t) & 1))
                })
                .collect();
            out.push(Permutation::from_images_unchecked(images));
        }
    }
    out
}

/// `p_n`, the sum of all elements of `H_n`.
pub fn hyperoctahedral_sum(n: usize, limits: &OracleLimits) -> Result<GroupAlgebraElement> {
    guard("n", n, limits.max_hecke_n)?;
    Ok(GroupAlgebraElement::sum_of(2 * n, hyperoctahedral_elements(n)))
}

/// `J⁽²⁾_i`, the sum of `(j i)` over `j ∈ {1, 1̄, ..., i-1, (i-1)‾}`, in `Z[S_2n]`.
pub fn odd_jm(i: usize, n: usize) -> Result<GroupAlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let target = point(i, false);
    Ok(GroupAlgebraElement::sum_of(
        2 * n,
        (0..target).map(|j| Permutation::transposition(2 * n, j, target)),
    ))
}

/// The odd Jucys-Murphy elements `J⁽²⁾_1, ..., J⁽²⁾_n`.
#[derive(Clone, Copy, Debug)]
pub struct OddJm {
    n: usize,
}

impl OddJm {
    pub fn new(n: usize) -> Self {
        OddJm { n }
    }
}

impl JucysMurphyFamily for OddJm {
    type Elem = GroupAlgebraElement;

    fn count(&self) -> usize {
        self.n
    }

    fn left_mul(&self, i: usize, x: &GroupAlgebraElement) -> GroupAlgebraElement {
        let target = point(i, false);
        let sources: Vec<usize> = (0..target).collect();
        x.left_mul_transpositions(&sources, target)
    }
}

/// Size of the double coset `H_n σ H_n` for σ of coset type `mu`: `|H_n|² / (z_μ 2^{ℓ(μ)})`.
pub fn double_coset_size(mu: &Partition) -> BigInt {
    let h = BigInt::from(factorial(mu.size())) << mu.size();
    (&h * &h) / (mu.centralizer_order() << mu.len())
}

/// Coefficients of a bi-invariant element on the double-coset sums `C⁽²⁾_μ`, `μ ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetExpansion {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl CosetExpansion {
    pub fn get(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    /// Entries in decreasing lexicographic order of the partition.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }
}

/// Reads off `μ ↦ coefficient of any σ of coset type μ`, failing with
/// [`Error::NotBiInvariant`] if that is not well defined.
pub fn coset_expansion(x: &GroupAlgebraElement) -> Result<CosetExpansion> {
    let n = x.ambient_size() / 2;
    let found = group_by_class(x.terms(), coset_type, double_coset_size, |coset_type, first, second| {
        Error::NotBiInvariant {
            coset_type,
            first,
            second,
        }
    })?;
    let coeffs = partitions_of(n)
        .into_iter()
        .map(|mu| {
            let c = found.get(&mu).cloned().unwrap_or_default();
            (mu, c)
        })
        .collect();
    Ok(CosetExpansion { n, coeffs })
}

/// `F(J⁽²⁾_1, ..., J⁽²⁾_n) · p_n` by exhaustive expansion.
pub fn evaluate_in_odd_jm(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<GroupAlgebraElement> {
    guard("k", f.degree(), limits.max_k)?;
    let pn = hyperoctahedral_sum(n, limits)?;
    Ok(apply(&OddJm::new(n), f, &pn))
}

/// `μ ↦ b^F_μ`.
pub fn b_expansion_oracle(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<CosetExpansion> {
    coset_expansion(&evaluate_in_odd_jm(f, n, limits)?)
}

/// `e_k(J⁽²⁾) p_n` is the sum of the `C⁽²⁾_μ` with `|μ| - ℓ(μ) = k`.
pub fn hecke_ek_check(k: usize, n: usize, limits: &OracleLimits) -> Result<bool> {
    if k > n {
        return Err(Error::InvalidInput(format!("need k ≤ n, got k = {k}, n = {n}")));
    }
    let x = evaluate_in_odd_jm(&SymFunc::Elementary(k), n, limits)?;
    Ok(x.terms().all(|(s, c)| *c == BigInt::from(1) && coset_type(s).rank() == k)
        && partitions_of(n)
            .iter()
            .filter(|mu| mu.rank() == k)
            .map(double_coset_size)
            .sum::<BigInt>()
            == BigInt::from(x.len()))
}

/// `F(J⁽²⁾) p_n = p_n F(J⁽²⁾)`.
pub fn two_sided_check(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<bool> {
    guard("k", f.degree(), limits.max_k)?;
    let pn = hyperoctahedral_sum(n, limits)?;
    let fj = apply(&OddJm::new(n), f, &GroupAlgebraElement::identity(2 * n));
    Ok(fj.mul(&pn) == pn.mul(&fj))
}

/// Compares the orbits of `H_n × H_n` acting on `S_2n` by `σ ↦ h σ h'` with the fibres of
/// [`coset_type`]. Exhaustive, so only meant for very small `n`.
pub fn coset_types_classify(n: usize, limits: &OracleLimits) -> Result<bool> {
    guard("n", n, limits.max_hecke_n.min(3))?;
    let group = all_permutations(2 * n);
    let index: HashMap<&Permutation, usize> = group.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let h = hyperoctahedral_elements(n);
    let mut orbit = vec![usize::MAX; group.len()];
    let mut next_orbit = 0;
    for start in 0..group.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        for a in &h {
            let left = a.compose(&group[start]);
            for b in &h {
                orbit[index[&left.compose(b)]] = next_orbit;
            }
        }
        next_orbit += 1;
    }
    // the two labellings must induce the same partition of S_2n
    let mut by_orbit: HashMap<usize, Partition> = HashMap::new();
    let mut by_type: HashMap<Partition, usize> = HashMap::new();
    for (p, &o) in group.iter().zip(&orbit) {
        let t = coset_type(p);
        if *by_orbit.entry(o).or_insert_with(|| t.clone()) != t {
            return Ok(false);
        }
        if *by_type.entry(t).or_insert(o) != o {
            return Ok(false);
        }
    }
    Ok(next_orbit == partitions_of(n).len())
}

/// `Σ_μ |C⁽²⁾_μ| = (2n)!`.
pub fn double_coset_sizes_sum(n: usize) -> bool {
    partitions_of(n).iter().map(double_coset_size).sum::<BigInt>() == BigInt::from(factorial(2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn eight_point_example_has_coset_type_3_1() {
        // 1↦3, 1̄↦1, 2↦4̄, 2̄↦3̄, 3↦2̄, 3̄↦2, 4↦4, 4̄↦1̄
        let pairs = [
            ((1, false), (3, false)),
            ((1, true), (1, false)),
            ((2, false), (4, true)),
            ((2, true), (3, true)),
            ((3, false), (2, true)),
            ((3, true), (2, false)),
            ((4, false), (4, false)),
            ((4, true), (1, true)),
        ];
        let mut images = vec![0; 8];
        for ((a, ab), (b, bb)) in pairs {
            images[point(a, ab)] = point(b, bb);
        }
        let sigma = Permutation::from_images(images).unwrap();
        assert_eq!(coset_type(&sigma), p(&[3, 1]));
    }

    #[test]
    fn identity_and_h_have_trivial_type() {
        assert_eq!(coset_type(&Permutation::identity(6)), p(&[1, 1, 1]));
        for n in 1..=3 {
            for h in hyperoctahedral_elements(n) {
                assert!(is_hyperoctahedral(&h));
                assert_eq!(coset_type(&h), Partition::ones(n));
            }
        }
    }

    #[test]
    fn hyperoctahedral_orders() {
        for (n, want) in [(1, 2), (2, 8), (3, 48)] {
            let elems = hyperoctahedral_elements(n);
            assert_eq!(elems.len(), want);
            let filtered = all_permutations(2 * n).into_iter().filter(is_hyperoctahedral).count();
            assert_eq!(filtered, want);
            assert_eq!(hyperoctahedral_sum(n, &limits()).unwrap().len(), want);
        }
    }

    #[test]
    fn odd_jm_terms() {
        assert!(odd_jm(1, 3).unwrap().is_empty());
        let j2 = odd_jm(2, 2).unwrap();
        assert_eq!(j2.len(), 2);
        assert_eq!(j2.coefficient(&Permutation::transposition(4, 0, 2)), BigInt::from(1));
        assert_eq!(j2.coefficient(&Permutation::transposition(4, 1, 2)), BigInt::from(1));
        assert_eq!(odd_jm(3, 3).unwrap().len(), 4);
        assert!(odd_jm(4, 3).is_err());
    }

    #[test]
    fn small_b_values() {
        let x = b_expansion_oracle(&SymFunc::Elementary(1), 2, &limits()).unwrap();
        assert_eq!(x.get(&p(&[2])), BigInt::from(1));
        assert_eq!(x.get(&p(&[1, 1])), BigInt::zero());
        let x = b_expansion_oracle(&SymFunc::Complete(2), 2, &limits()).unwrap();
        assert_eq!(x.get(&p(&[2])), BigInt::from(1));
        for n in 1..=3 {
            let x = b_expansion_oracle(&SymFunc::Complete(0), n, &limits()).unwrap();
            for (mu, c) in x.entries() {
                let want = i32::from(*mu == Partition::ones(n));
                assert_eq!(*c, BigInt::from(want));
            }
        }
    }

    #[test]
    fn double_coset_sizes() {
        assert_eq!(double_coset_size(&p(&[1])), BigInt::from(2));
        assert_eq!(double_coset_size(&p(&[1, 1])), BigInt::from(8));
        assert_eq!(double_coset_size(&p(&[2])), BigInt::from(16));
        for n in 0..=6 {
            assert!(double_coset_sizes_sum(n));
        }
    }

    #[test]
    fn classification_small() {
        for n in 1..=3 {
            assert!(coset_types_classify(n, &limits()).unwrap());
        }
    }

    #[test]
    fn ek_and_two_sided() {
        for n in 0..=3 {
            for k in 0..=n {
                assert!(hecke_ek_check(k, n, &limits()).unwrap(), "k = {k}, n = {n}");
            }
        }
        for k in 0..=3 {
            for f in [SymFunc::Complete(k), SymFunc::PowerSum(k)] {
                assert!(two_sided_check(&f, 2, &limits()).unwrap());
            }
        }
    }
}
