//! Brute-force oracle in the group algebra of `S_n`.
//!
//! Everything here is computed by explicit expansion, so it serves as ground truth for the
//! recurrence engine. Sizes are bounded by [`OracleLimits`].

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{factorial, Permutation};
use crate::symfunc::{apply, guard, JucysMurphyFamily, SymFunc};

/// Bounds on the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `n` for the `S_n` oracle.
    pub max_n: usize,
    /// Largest degree of the evaluated symmetric function.
    pub max_k: usize,
    /// Largest `n` for the Hecke oracle (which lives in `S_{2n}`).
    pub max_hecke_n: usize,
    /// Largest support bound `N` for the partial-permutation oracle.
    pub max_partial_n: usize,
    /// Largest `n` for Jack polynomials and the θ matrix.
    pub max_jack_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: 8,
            max_k: 8,
            max_hecke_n: 4,
            max_partial_n: 8,
            max_jack_n: 6,
        }
    }
}

/// The Jucys-Murphy elements `J_1, ..., J_n` of `S_n`.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricJm {
    n: usize,
}

impl SymmetricJm {
    pub fn new(n: usize) -> Self {
        SymmetricJm { n }
    }
}

impl JucysMurphyFamily for SymmetricJm {
    type Elem = GroupAlgebraElement;

    fn count(&self) -> usize {
        self.n
    }

    fn left_mul(&self, i: usize, x: &GroupAlgebraElement) -> GroupAlgebraElement {
        let sources: Vec<usize> = (0..i - 1).collect();
        x.left_mul_transpositions(&sources, i - 1)
    }
}

/// `J_i = (1 i) + ... + (i-1 i)` in `Z[S_n]` (1-based `i`).
pub fn jm_element(i: usize, n: usize) -> Result<GroupAlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(GroupAlgebraElement::sum_of(
        n,
        (0..i - 1).map(|j| Permutation::transposition(n, j, i - 1)),
    ))
}

/// `F(J_1, ..., J_n)` by exhaustive expansion.
pub fn evaluate_in_jm(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<GroupAlgebraElement> {
    guard("n", n, limits.max_n)?;
    guard("k", f.degree(), limits.max_k)?;
    Ok(apply(
        &SymmetricJm::new(n),
        f,
        &GroupAlgebraElement::identity(n),
    ))
}

/// Coefficients of a central element on the class sums `C_λ`, `λ ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassExpansion {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl ClassExpansion {
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Entries in decreasing lexicographic order of the partition.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }
}

/// Number of permutations of `S_n` with cycle type `lambda`.
pub fn class_size(lambda: &Partition) -> BigInt {
    BigInt::from(factorial(lambda.size())) / lambda.centralizer_order()
}

/// Groups coefficients by a class function, checking that they are constant on every class
/// and that partially present classes do not occur. Returns `(class, coefficient)` pairs.
pub(crate) fn group_by_class<'a, I, F>(
    terms: I,
    class_of: F,
    class_size: impl Fn(&Partition) -> BigInt,
    err: impl Fn(Partition, String, String) -> Error,
) -> Result<HashMap<Partition, BigInt>>
where
    I: IntoIterator<Item = (&'a Permutation, &'a BigInt)>,
    F: Fn(&Permutation) -> Partition,
{
    let mut seen: HashMap<Partition, (BigInt, usize)> = HashMap::new();
    for (p, c) in terms {
        let lam = class_of(p);
        match seen.get_mut(&lam) {
            Some((first, count)) => {
                if first != c {
                    return Err(err(lam, first.to_string(), c.to_string()));
                }
                *count += 1;
            }
            None => {
                seen.insert(lam, (c.clone(), 1));
            }
        }
    }
    let mut out = HashMap::new();
    for (lam, (c, count)) in seen {
        if BigInt::from(count) != class_size(&lam) {
            return Err(err(lam, c.to_string(), "0".to_string()));
        }
        out.insert(lam, c);
    }
    Ok(out)
}

/// Reads off `λ ↦ coefficient of any σ of type λ`, failing with [`Error::NotCentral`] if the
/// coefficient is not a class function.
pub fn class_expansion(x: &GroupAlgebraElement) -> Result<ClassExpansion> {
    let n = x.ambient_size();
    let found = group_by_class(
        x.terms(),
        Permutation::cycle_type,
        class_size,
        |cycle_type, first, second| Error::NotCentral {
            cycle_type,
            first,
            second,
        },
    )?;
    let coeffs = partitions_of(n)
        .into_iter()
        .map(|lam| {
            let c = found.get(&lam).cloned().unwrap_or_default();
            (lam, c)
        })
        .collect();
    Ok(ClassExpansion { n, coeffs })
}

/// Class expansion of `F(J_1, ..., J_n)`.
pub fn oracle_class_expansion(f: &SymFunc, n: usize, limits: &OracleLimits) -> Result<ClassExpansion> {
    class_expansion(&evaluate_in_jm(f, n, limits)?)
}

/// `e_k(J_1, ..., J_n)` is the sum of all permutations with exactly `n - k` cycles.
pub fn jucys_ek_check(k: usize, n: usize, limits: &OracleLimits) -> Result<bool> {
    if k > n {
        return Err(Error::InvalidInput(format!("need k <= n, got k = {k}, n = {n}")));
    }
    let x = evaluate_in_jm(&SymFunc::Elementary(k), n, limits)?;
    let all_unit = x
        .terms()
        .all(|(p, c)| c.is_one() && p.num_cycles() == n - k);
    // Stirling numbers of the first kind count the permutations with n - k cycles.
    let expected = stirling_first(n, n - k);
    Ok(all_unit && BigInt::from(x.len()) == expected)
}

/// Unsigned Stirling numbers of the first kind `[n, c]`.
fn stirling_first(n: usize, c: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += v * BigInt::from(m);
        }
        row = next;
    }
    row.get(c).cloned().unwrap_or_default()
}

/// Checks `J_i J_j = J_j J_i` for all `i, j ≤ n`.
pub fn jm_commute(n: usize) -> Result<bool> {
    let js = (1..=n).map(|i| jm_element(i, n)).collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        for j in i + 1..n {
            if js[i].mul(&js[j]) != js[j].mul(&js[i]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
