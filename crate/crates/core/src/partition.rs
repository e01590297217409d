//! Integer partitions and weak compositions.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! The derived ordering is lexicographic on that list; [`partitions_of`]
//! lists partitions in *decreasing* lexicographic order, e.g. `(3), (2,1), (1,1,1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts; zeros are rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// `|λ| - ℓ(λ)`, the minimal number of transpositions needed for this cycle type.
    pub fn rank(&self) -> usize {
        self.size() - self.len()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Number of parts equal to one.
    pub fn ones_count(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn contains_part(&self, part: usize) -> bool {
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    /// Removes one copy of `part`.
    pub fn remove_part(&self, part: usize) -> Result<Partition> {
        match self.parts.iter().position(|&p| p == part) {
            Some(idx) => {
                let mut parts = self.parts.clone();
                parts.remove(idx);
                Ok(Partition { parts })
            }
            None => Err(Error::NoSuchPart {
                partition: self.clone(),
                part,
            }),
        }
    }

    /// Inserts `part`, keeping the parts weakly decreasing.
    pub fn add_part(&self, part: usize) -> Result<Partition> {
        if part == 0 {
            return Err(Error::InvalidPart(part));
        }
        let mut parts = self.parts.clone();
        let idx = parts.partition_point(|&p| p >= part);
        parts.insert(idx, part);
        Ok(Partition { parts })
    }

    /// Adds several parts at once; every entry must be positive.
    pub fn with_parts(&self, extra: &[usize]) -> Result<Partition> {
        if let Some(&bad) = extra.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPart(bad));
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(extra);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Appends `count` parts equal to one.
    pub fn with_ones(&self, count: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, count));
        Partition { parts }
    }

    /// Splits off the parts equal to one: returns the remaining partition and how many ones
    /// were removed.
    pub fn strip_ones(&self) -> (Partition, usize) {
        let keep = self.parts.partition_point(|&p| p > 1);
        (
            Partition {
                parts: self.parts[..keep].to_vec(),
            },
            self.parts.len() - keep,
        )
    }

    /// Distinct parts in decreasing order, with their multiplicities.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.grouped() {
            for j in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(j);
            }
        }
        z
    }

    /// The same partition with every part decremented by one.
    pub fn minus_ones(&self) -> WeakComposition {
        WeakComposition::new(self.parts.iter().map(|&p| p - 1).collect())
    }

    /// Replaces one copy of `old` by `new` (`new > 0`).
    pub(crate) fn replace_part(&self, old: usize, new: usize) -> Partition {
        let mut parts = self.parts.clone();
        let idx = parts
            .iter()
            .position(|&p| p == old)
            .expect("replace_part: part must be present");
        parts.remove(idx);
        let at = parts.partition_point(|&p| p >= new);
        parts.insert(at, new);
        Partition { parts }
    }

    /// Unchecked insertion used by the hot recurrence paths.
    pub(crate) fn inserted(&self, extra: &[usize]) -> Partition {
        let mut parts = self.parts.clone();
        for &e in extra {
            debug_assert!(e > 0);
            let at = parts.partition_point(|&p| p >= e);
            parts.insert(at, e);
        }
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty partition is written `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,1,1"` and `"-"` (or an empty string) for the empty partition. Parts are
    /// sorted, so `"1,3"` parses as `(3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

/// A sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    entries: Vec<usize>,
}

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    // Classical successor rule on the decreasing sequence.
    let mut cur = vec![n];
    loop {
        out.push(Partition { parts: cur.clone() });
        let mut rem = 0;
        while let Some(&1) = cur.last() {
            cur.pop();
            rem += 1;
        }
        let Some(last) = cur.last_mut() else { break };
        *last -= 1;
        let cap = *last;
        rem += 1;
        while rem > 0 {
            let take = rem.min(cap);
            cur.push(take);
            rem -= take;
        }
    }
    out
}

/// All partitions of every size in `0..=max_size`, smallest size first.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            for j in 1.. {
                let j = j as i64;
                let g1 = (j * (3 * j - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                acc += sign * table[m - g1];
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g2 <= m {
                    acc += sign * table[m - g2];
                }
            }
            table[m] = acc;
        }
        table[n]
    }

    #[test]
    fn remove_part_examples() {
        assert_eq!(p(&[3, 2, 1]).remove_part(2).unwrap(), p(&[3, 1]));
        assert_eq!(p(&[2, 2]).remove_part(2).unwrap(), p(&[2]));
        assert!(matches!(
            p(&[1]).remove_part(2),
            Err(Error::NoSuchPart { part: 2, .. })
        ));
    }

    #[test]
    fn add_part_examples() {
        assert_eq!(p(&[3, 1]).add_part(2).unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().add_part(5).unwrap(), p(&[5]));
        assert_eq!(p(&[2, 2]).add_part(2).unwrap(), p(&[2, 2, 2]));
        assert!(matches!(p(&[2]).add_part(0), Err(Error::InvalidPart(0))));
    }

    #[test]
    fn strip_ones_examples() {
        assert_eq!(p(&[3, 1, 1]).strip_ones(), (p(&[3]), 2));
        assert_eq!(p(&[1, 1, 1]).strip_ones(), (Partition::empty(), 3));
        assert_eq!(p(&[4, 2]).strip_ones(), (p(&[4, 2]), 0));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn enumerate_counts_match_pentagonal_recurrence() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partition_count(n), e);
            assert_eq!(partitions_of(n).len() as i64, e, "n = {n}");
        }
        for n in 10..=20 {
            assert_eq!(partitions_of(n).len() as i64, partition_count(n));
        }
    }

    #[test]
    fn enumerate_is_strictly_decreasing_and_valid() {
        for n in 0..=12 {
            let all = partitions_of(n);
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
            for q in &all {
                assert_eq!(q.size(), n);
                assert!(Partition::new(q.parts().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn text_syntax() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("1,3".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn json_is_array_of_integers() {
        let q = p(&[4, 2, 2]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[4,2,2]");
        let back: Partition = serde_json::from_str("[4,2,2]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn grouped_visits_distinct_parts() {
        assert_eq!(p(&[3, 3, 2, 1, 1, 1]).grouped(), vec![(3, 2), (2, 1), (1, 3)]);
        assert!(Partition::empty().grouped().is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition_strategy() -> impl Strategy<Value = Partition> {
            prop::collection::vec(1usize..8, 0..8).prop_map(|v| Partition::from_unsorted(v).unwrap())
        }

        proptest! {
            #[test]
            fn add_then_remove_is_identity(q in partition_strategy(), v in 1usize..10) {
                let added = q.add_part(v).unwrap();
                prop_assert!(added.parts().windows(2).all(|w| w[0] >= w[1]));
                prop_assert_eq!(added.size(), q.size() + v);
                prop_assert_eq!(added.remove_part(v).unwrap(), q);
            }

            #[test]
            fn strip_ones_reassembles(q in partition_strategy()) {
                let (bar, m1) = q.strip_ones();
                prop_assert!(!bar.contains_part(1));
                prop_assert_eq!(bar.with_ones(m1), q);
            }

            #[test]
            fn text_round_trip(q in partition_strategy()) {
                prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
            }
        }
    }
}
