//! Partial permutations and the truncated partial-permutation algebra.
//!
//! A partial permutation is a finite support `d ⊂ {1, 2, ...}` with a permutation of `d`.
//! The product takes the union of the supports and composes the permutations extended by
//! fixed points. Only supports inside `{1, ..., N}` are ever materialized; the coefficient of
//! any such term in `F(X_1, X_2, ...)` is exact because only `X_i` with `i ≤ max(d)` contribute.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{AlgebraElement, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::symfunc::{apply, guard, JucysMurphyFamily, SymFunc};
use crate::symgroup::{class_size, OracleLimits};

/// A pair `(d, σ)`. Points are positive integers; `support` is sorted and
/// `images[i] = σ(support[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    support: Vec<usize>,
    images: Vec<usize>,
}

impl PartialPermutation {
    pub fn new(support: Vec<usize>, images: Vec<usize>) -> Result<Self> {
        let bad = || {
            Error::InvalidInput(format!(
                "({support:?}, {images:?}) is not a partial permutation"
            ))
        };
        if support.len() != images.len()
            || support.contains(&0)
            || support.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(bad());
        }
        let mut sorted = images.clone();
        sorted.sort_unstable();
        if sorted != support {
            return Err(bad());
        }
        Ok(PartialPermutation { support, images })
    }

    /// The empty partial permutation, unit of the algebra.
    pub fn empty() -> Self {
        PartialPermutation {
            support: Vec::new(),
            images: Vec::new(),
        }
    }

    /// `({a, b}, (a b))`.
    pub fn transposition(a: usize, b: usize) -> Self {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        PartialPermutation {
            support: vec![lo, hi],
            images: vec![hi, lo],
        }
    }

    /// `({1, ..., |λ|}, σ)` with σ of cycle type λ, cycles on consecutive points.
    pub fn canonical(lambda: &Partition) -> Self {
        let sigma = Permutation::with_cycle_type(lambda);
        PartialPermutation {
            support: (1..=lambda.size()).collect(),
            images: sigma.images().iter().map(|&x| x + 1).collect(),
        }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    fn image(&self, x: usize) -> usize {
        match self.support.binary_search(&x) {
            Ok(i) => self.images[i],
            Err(_) => x,
        }
    }

    /// `self · other`: supports are merged, `other` is applied first.
    pub fn compose(&self, other: &PartialPermutation) -> PartialPermutation {
        let mut support = self.support.clone();
        support.extend_from_slice(&other.support);
        support.sort_unstable();
        support.dedup();
        let images = support
            .iter()
            .map(|&x| self.image(other.image(x)))
            .collect();
        PartialPermutation { support, images }
    }

    /// `({j, i} ∪ d, (j i)·σ)`.
    fn left_transpose(&self, j: usize, i: usize) -> PartialPermutation {
        let mut support = self.support.clone();
        for x in [j, i] {
            if let Err(at) = support.binary_search(&x) {
                support.insert(at, x);
            }
        }
        let images = support
            .iter()
            .map(|&x| {
                let y = self.image(x);
                if y == j {
                    i
                } else if y == i {
                    j
                } else {
                    y
                }
            })
            .collect();
        PartialPermutation { support, images }
    }

    /// The permutation of the support, relabelled onto `0..|d|` in increasing order.
    fn packed(&self) -> Permutation {
        let pos = |x: usize| self.support.binary_search(&x).expect("image lies in support");
        Permutation::from_images_unchecked(self.images.iter().map(|&y| pos(y)).collect())
    }

    pub fn cycle_type(&self) -> Partition {
        self.packed().cycle_type()
    }

    /// `|d| − #cycles + #fixed points`.
    pub fn degree(&self) -> usize {
        let sigma = self.packed();
        self.support.len() - sigma.num_cycles() + sigma.num_fixed_points()
    }

    /// The extension to `0..n` by fixed points (point `p` becomes index `p - 1`), when `d ⊂ {1..n}`.
    pub fn extend_to(&self, n: usize) -> Option<Permutation> {
        if self.support.last().is_some_and(|&m| m > n) {
            return None;
        }
        let mut images: Vec<usize> = (0..n).collect();
        for (&x, &y) in self.support.iter().zip(&self.images) {
            images[x - 1] = y - 1;
        }
        Some(Permutation::from_images_unchecked(images))
    }
}

/// Finite integer combination of partial permutations. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialAlgebraElement {
    terms: HashMap<PartialPermutation, BigInt>,
}

impl PartialAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(PartialPermutation::empty())
    }

    pub fn basis(p: PartialPermutation) -> Self {
        let mut x = Self::zero();
        x.add_term(p, &BigInt::from(1));
        x
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &PartialPermutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartialPermutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, p: PartialPermutation, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn mul(&self, other: &PartialAlgebraElement) -> PartialAlgebraElement {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), &(a * b));
            }
        }
        out
    }

    /// The morphism to `Z[S_n]`: keep terms supported in `{1..n}` and forget supports.
    pub fn project(&self, n: usize) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(n);
        for (p, c) in &self.terms {
            if let Some(sigma) = p.extend_to(n) {
                out.add_term(sigma, c);
            }
        }
        out
    }
}

impl AlgebraElement for PartialAlgebraElement {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c);
        }
    }

    fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PartialAlgebraElement {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `X_1, ..., X_N` with `X_i = Σ_{j<i} ({j, i}, (j i))`.
#[derive(Clone, Copy, Debug)]
pub struct PartialJm {
    n: usize,
}

impl PartialJm {
    pub fn new(n: usize) -> Self {
        PartialJm { n }
    }
}

impl JucysMurphyFamily for PartialJm {
    type Elem = PartialAlgebraElement;

    fn count(&self) -> usize {
        self.n
    }

    fn left_mul(&self, i: usize, x: &PartialAlgebraElement) -> PartialAlgebraElement {
        let mut out = PartialAlgebraElement::zero();
        for (p, c) in &x.terms {
            for j in 1..i {
                out.add_term(p.left_transpose(j, i), c);
            }
        }
        out
    }
}

/// `X_i` as an algebra element (1-based `i`).
pub fn partial_jm_element(i: usize) -> PartialAlgebraElement {
    let mut x = PartialAlgebraElement::zero();
    for j in 1..i {
        x.add_term(PartialPermutation::transposition(j, i), &BigInt::from(1));
    }
    x
}

/// `F(X_1, ..., X_N)` expanded in the truncated algebra.
pub fn partial_jm_evaluate(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<PartialAlgebraElement> {
    guard("N", n, limits.max_partial_n)?;
    guard("k", f.degree(), limits.max_k)?;
    Ok(apply(&PartialJm::new(n), f, &PartialAlgebraElement::one()))
}

/// `h_k(X_1, ..., X_N)`.
pub fn partial_jm_expansion(k: usize, n: usize, limits: &OracleLimits) -> Result<PartialAlgebraElement> {
    partial_jm_evaluate(&SymFunc::Complete(k), n, limits)
}

/// Number of partial permutations with support in `{1..N}` and cycle type `lambda`.
pub fn partial_class_size(lambda: &Partition, n: usize) -> BigInt {
    let s = lambda.size();
    if s > n {
        return BigInt::zero();
    }
    let mut binom = BigInt::from(1);
    for i in 0..s {
        binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    binom * class_size(lambda)
}

/// `λ ↦ coefficient of any (d, σ)` with `|d| = |λ|` and σ of type λ, for all `|λ| ≤ N`.
/// Fails with [`Error::NotCentral`] if the coefficients are not invariant under relabelling.
pub fn partial_class_expansion(x: &PartialAlgebraElement, n: usize) -> Result<Vec<(Partition, BigInt)>> {
    let mut seen: HashMap<Partition, (BigInt, usize)> = HashMap::new();
    for (p, c) in x.terms() {
        if p.support.last().is_some_and(|&m| m > n) {
            continue;
        }
        let lam = p.cycle_type();
        match seen.get_mut(&lam) {
            Some((first, count)) => {
                if first != c {
                    return Err(Error::NotCentral {
                        cycle_type: lam,
                        first: first.to_string(),
                        second: c.to_string(),
                    });
                }
                *count += 1;
            }
            None => {
                seen.insert(lam, (c.clone(), 1));
            }
        }
    }
    let mut out = Vec::new();
    for size in 0..=n {
        for lam in partitions_of(size) {
            let c = match seen.get(&lam) {
                Some((c, count)) => {
                    if BigInt::from(*count) != partial_class_size(&lam, n) {
                        return Err(Error::NotCentral {
                            cycle_type: lam,
                            first: c.to_string(),
                            second: "0".to_string(),
                        });
                    }
                    c.clone()
                }
                None => BigInt::zero(),
            };
            out.push((lam, c));
        }
    }
    Ok(out)
}

/// `c^k_λ` read directly off `h_k(X_1, ..., X_{|λ|})`.
pub fn c_from_partial_oracle(k: usize, lambda: &Partition, limits: &OracleLimits) -> Result<BigInt> {
    let x = partial_jm_expansion(k, lambda.size(), limits)?;
    Ok(x.coefficient(&PartialPermutation::canonical(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::evaluate_in_jm;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(PartialPermutation::transposition(1, 2).degree(), 1);
        assert_eq!(PartialPermutation::new(vec![1], vec![1]).unwrap().degree(), 1);
        assert_eq!(PartialPermutation::new(vec![1, 2, 3], vec![2, 3, 1]).unwrap().degree(), 2);
        assert_eq!(PartialPermutation::empty().degree(), 0);
    }

    #[test]
    fn product_unions_supports() {
        let a = PartialPermutation::transposition(1, 2);
        let b = PartialPermutation::new(vec![3], vec![3]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.support(), &[1, 2, 3]);
        assert_eq!(ab.cycle_type(), p(&[2, 1]));
        // (1 2)·(1 2) keeps the support
        let sq = a.compose(&a);
        assert_eq!(sq.support(), &[1, 2]);
        assert_eq!(sq.cycle_type(), p(&[1, 1]));
    }

    #[test]
    fn left_transpose_matches_product() {
        let q = PartialPermutation::new(vec![1, 3, 4], vec![3, 4, 1]).unwrap();
        for j in 1..5 {
            assert_eq!(
                q.left_transpose(j, 5),
                PartialPermutation::transposition(j, 5).compose(&q)
            );
        }
    }

    #[test]
    fn x_elements_commute() {
        for i in 1..=5 {
            for j in 1..=5 {
                let a = partial_jm_element(i);
                let b = partial_jm_element(j);
                assert_eq!(a.mul(&b), b.mul(&a));
            }
        }
    }

    #[test]
    fn h1_coefficients() {
        let x = partial_jm_expansion(1, 4, &limits()).unwrap();
        assert_eq!(x.coefficient(&PartialPermutation::transposition(1, 2)), BigInt::from(1));
        for (q, c) in x.terms() {
            assert_eq!(q.support().len(), 2);
            assert_eq!(*c, BigInt::from(1));
        }
    }

    #[test]
    fn small_c_values() {
        assert_eq!(c_from_partial_oracle(3, &p(&[4]), &limits()).unwrap(), BigInt::from(5));
        assert_eq!(c_from_partial_oracle(2, &p(&[1, 1]), &limits()).unwrap(), BigInt::from(1));
        assert_eq!(c_from_partial_oracle(2, &p(&[3]), &limits()).unwrap(), BigInt::from(2));
        assert_eq!(c_from_partial_oracle(3, &p(&[2, 1]), &limits()).unwrap(), BigInt::from(4));
    }

    #[test]
    fn expansion_is_relabelling_invariant() {
        for k in 0..=4 {
            let x = partial_jm_expansion(k, 5, &limits()).unwrap();
            partial_class_expansion(&x, 5).unwrap();
        }
    }

    #[test]
    fn degree_bound_holds() {
        for k in 0..=5 {
            let x = partial_jm_expansion(k, 6, &limits()).unwrap();
            for (q, _) in x.terms() {
                assert!(q.degree() <= k, "{q:?} in h_{k}");
            }
        }
    }

    #[test]
    fn projection_reproduces_symmetric_group() {
        for k in 0..=4 {
            let x = partial_jm_expansion(k, 6, &limits()).unwrap();
            for n in 0..=6 {
                let want = evaluate_in_jm(&SymFunc::Complete(k), n, &limits()).unwrap();
                assert_eq!(x.project(n), want, "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn guard_applies() {
        assert!(matches!(
            partial_jm_expansion(2, 9, &limits()),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn invalid_partial_permutations() {
        assert!(PartialPermutation::new(vec![1, 2], vec![1, 3]).is_err());
        assert!(PartialPermutation::new(vec![2, 1], vec![1, 2]).is_err());
        assert!(PartialPermutation::new(vec![0], vec![0]).is_err());
    }
}
