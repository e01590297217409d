//! Integer group algebra of a symmetric group, with sparse storage.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::perm::Permutation;

/// Operations shared by the sparse algebras the oracles work in.
pub trait AlgebraElement: Clone {
    fn zero_like(&self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn scaled(&self, c: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
}

/// A finite integer combination of permutations of a fixed ambient size.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: HashMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        let mut x = Self::zero(p.size());
        x.terms.insert(p, BigInt::one());
        x
    }

    /// Sum of the given permutations, each with coefficient one (repeats accumulate).
    pub fn sum_of<I: IntoIterator<Item = Permutation>>(n: usize, perms: I) -> Self {
        let mut x = Self::zero(n);
        for p in perms {
            x.add_term(p, &BigInt::one());
        }
        x
    }

    pub fn ambient_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by permutation, for stable output.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, p: Permutation, c: &BigInt) {
        debug_assert_eq!(p.size(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    /// Convolution product `self · other`.
    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.n, other.n, "ambient sizes differ");
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), &(a * b));
            }
        }
        out
    }

    /// `(Σ_j (j target)) · self` over the given sources `j`.
    pub fn left_mul_transpositions(&self, sources: &[usize], target: usize) -> GroupAlgebraElement {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.terms {
            for &j in sources {
                out.add_term(p.left_transpose(j, target), c);
            }
        }
        out
    }
}

impl AlgebraElement for GroupAlgebraElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.n)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "ambient sizes differ");
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c);
        }
    }

    fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
