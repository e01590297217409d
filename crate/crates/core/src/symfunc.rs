//! Symmetric functions evaluated in a commuting family of Jucys-Murphy-type elements.
//!
//! Evaluation is always a left action on a seed element: `F(J_1, ..., J_n) · seed`.
//! The oracles pass the identity (or the hyperoctahedral sum) as the seed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A symmetric function built from the complete, elementary, power-sum and monomial families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymFunc {
    Complete(usize),
    Elementary(usize),
    PowerSum(usize),
    Monomial(Partition),
    Product(Vec<SymFunc>),
    Combination(Vec<(BigInt, SymFunc)>),
}

impl SymFunc {
    /// Homogeneous degree; for combinations, the largest degree of a summand.
    pub fn degree(&self) -> usize {
        match self {
            SymFunc::Complete(k) | SymFunc::Elementary(k) | SymFunc::PowerSum(k) => *k,
            SymFunc::Monomial(lambda) => lambda.size(),
            SymFunc::Product(fs) => fs.iter().map(SymFunc::degree).sum(),
            SymFunc::Combination(terms) => terms.iter().map(|(_, f)| f.degree()).max().unwrap_or(0),
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFunc::Complete(k) => write!(f, "h{k}"),
            SymFunc::Elementary(k) => write!(f, "e{k}"),
            SymFunc::PowerSum(k) => write!(f, "p{k}"),
            SymFunc::Monomial(l) => write!(f, "m[{l}]"),
            SymFunc::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            SymFunc::Combination(terms) => {
                for (i, (c, g)) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{c}*({g})")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    /// Parses a single generator: `h3`, `e2`, `p4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("unknown symmetric function {s:?}"));
        let (head, tail) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let k: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "h" => Ok(SymFunc::Complete(k)),
            "e" => Ok(SymFunc::Elementary(k)),
            "p" => Ok(SymFunc::PowerSum(k)),
            _ => Err(bad()),
        }
    }
}

/// A commuting family `J_1, ..., J_n` acting on the left of an algebra.
pub trait JucysMurphyFamily {
    type Elem: AlgebraElement;

    /// Number of elements in the family.
    fn count(&self) -> usize;

    /// `J_i · x` for `1 ≤ i ≤ count()`.
    fn left_mul(&self, i: usize, x: &Self::Elem) -> Self::Elem;
}

/// `F(J_1, ..., J_n) · seed`.
pub fn apply<J: JucysMurphyFamily>(family: &J, f: &SymFunc, seed: &J::Elem) -> J::Elem {
    match f {
        SymFunc::Complete(k) => complete(family, *k, seed),
        SymFunc::Elementary(k) => elementary(family, *k, seed),
        SymFunc::PowerSum(k) => power_sum(family, *k, seed),
        SymFunc::Monomial(lambda) => monomial(family, lambda, seed),
        SymFunc::Product(fs) => fs
            .iter()
            .rev()
            .fold(seed.clone(), |acc, g| apply(family, g, &acc)),
        SymFunc::Combination(terms) => {
            let mut out = seed.zero_like();
            for (c, g) in terms {
                out.add_assign_ref(&apply(family, g, seed).scaled(c));
            }
            out
        }
    }
}

// h_k(J_1..J_m) = h_k(J_1..J_{m-1}) + J_m h_{k-1}(J_1..J_m)
fn complete<J: JucysMurphyFamily>(family: &J, k: usize, seed: &J::Elem) -> J::Elem {
    let mut h: Vec<J::Elem> = (0..=k)
        .map(|j| if j == 0 { seed.clone() } else { seed.zero_like() })
        .collect();
    for m in 1..=family.count() {
        for j in 1..=k {
            let step = family.left_mul(m, &h[j - 1]);
            h[j].add_assign_ref(&step);
        }
    }
    h.pop().expect("k + 1 entries")
}

// e_k(J_1..J_m) = e_k(J_1..J_{m-1}) + J_m e_{k-1}(J_1..J_{m-1})
fn elementary<J: JucysMurphyFamily>(family: &J, k: usize, seed: &J::Elem) -> J::Elem {
    let mut e: Vec<J::Elem> = (0..=k)
        .map(|j| if j == 0 { seed.clone() } else { seed.zero_like() })
        .collect();
    for m in 1..=family.count() {
        for j in (1..=k.min(m)).rev() {
            let step = family.left_mul(m, &e[j - 1]);
            e[j].add_assign_ref(&step);
        }
    }
    e.pop().expect("k + 1 entries")
}

fn power_sum<J: JucysMurphyFamily>(family: &J, k: usize, seed: &J::Elem) -> J::Elem {
    if k == 0 {
        return seed.scaled(&BigInt::from(family.count()));
    }
    let mut out = seed.zero_like();
    for m in 1..=family.count() {
        let mut x = seed.clone();
        for _ in 0..k {
            x = family.left_mul(m, &x);
            if x.is_zero() {
                break;
            }
        }
        out.add_assign_ref(&x);
    }
    out
}

/// Sum over distinct exponent vectors that rearrange `lambda`, processed one variable at a time.
fn monomial<J: JucysMurphyFamily>(family: &J, lambda: &Partition, seed: &J::Elem) -> J::Elem {
    // state: remaining parts (decreasing) -> accumulated element
    let mut states: Vec<(Vec<usize>, J::Elem)> = vec![(lambda.parts().to_vec(), seed.clone())];
    for m in 1..=family.count() {
        let mut next: Vec<(Vec<usize>, J::Elem)> = Vec::new();
        let push = |key: Vec<usize>, x: J::Elem, next: &mut Vec<(Vec<usize>, J::Elem)>| {
            if x.is_zero() {
                return;
            }
            match next.iter_mut().find(|(k, _)| *k == key) {
                Some((_, acc)) => acc.add_assign_ref(&x),
                None => next.push((key, x)),
            }
        };
        for (rest, x) in &states {
            push(rest.clone(), x.clone(), &mut next);
            let mut prev = None;
            for (idx, &v) in rest.iter().enumerate() {
                if prev == Some(v) {
                    continue;
                }
                prev = Some(v);
                let mut y = x.clone();
                for _ in 0..v {
                    y = family.left_mul(m, &y);
                }
                let mut key = rest.clone();
                key.remove(idx);
                push(key, y, &mut next);
            }
        }
        states = next;
    }
    states
        .into_iter()
        .find(|(rest, _)| rest.is_empty())
        .map(|(_, x)| x)
        .unwrap_or_else(|| seed.zero_like())
}

/// Checks that a family degree fits within a configured bound.
pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::ResourceGuard { what, value, limit })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    /// Scalars: the family acts on integers by multiplication with fixed values.
    #[derive(Clone, Debug, PartialEq)]
    struct Scalar(BigInt);

    impl AlgebraElement for Scalar {
        fn zero_like(&self) -> Self {
            Scalar(BigInt::zero())
        }
        fn add_assign_ref(&mut self, other: &Self) {
            self.0 += &other.0;
        }
        fn scaled(&self, c: &BigInt) -> Self {
            Scalar(&self.0 * c)
        }
        fn is_zero(&self) -> bool {
            self.0.is_zero()
        }
    }

    struct Values(Vec<i64>);

    impl JucysMurphyFamily for Values {
        type Elem = Scalar;
        fn count(&self) -> usize {
            self.0.len()
        }
        fn left_mul(&self, i: usize, x: &Scalar) -> Scalar {
            Scalar(&x.0 * self.0[i - 1])
        }
    }

    fn eval(vals: &[i64], f: &SymFunc) -> i64 {
        let r = apply(&Values(vals.to_vec()), f, &Scalar(BigInt::one())).0;
        i64::try_from(r).unwrap()
    }

    /// Brute force over all exponent vectors of total degree k.
    fn brute(vals: &[i64], k: usize, keep: &dyn Fn(&[usize]) -> bool) -> i64 {
        fn rec(vals: &[i64], k: usize, exps: &mut Vec<usize>, keep: &dyn Fn(&[usize]) -> bool) -> i64 {
            if exps.len() == vals.len() {
                if exps.iter().sum::<usize>() != k || !keep(exps) {
                    return 0;
                }
                return exps
                    .iter()
                    .zip(vals)
                    .map(|(&e, &v)| v.pow(e as u32))
                    .product();
            }
            let mut s = 0;
            for e in 0..=k {
                exps.push(e);
                s += rec(vals, k, exps, keep);
                exps.pop();
            }
            s
        }
        rec(vals, k, &mut Vec::new(), keep)
    }

    #[test]
    fn families_match_brute_force_on_scalars() {
        let vals = [0, 2, -1, 3];
        for k in 0..=4 {
            assert_eq!(eval(&vals, &SymFunc::Complete(k)), brute(&vals, k, &|_| true));
            assert_eq!(
                eval(&vals, &SymFunc::Elementary(k)),
                brute(&vals, k, &|e| e.iter().all(|&x| x <= 1))
            );
            let p: i64 = if k == 0 {
                vals.len() as i64
            } else {
                vals.iter().map(|v| v.pow(k as u32)).sum()
            };
            assert_eq!(eval(&vals, &SymFunc::PowerSum(k)), p);
        }
        let lam = Partition::new(vec![2, 1]).unwrap();
        let want = brute(&vals, 3, &|e| {
            let mut nz: Vec<usize> = e.iter().copied().filter(|&x| x > 0).collect();
            nz.sort_unstable_by(|a, b| b.cmp(a));
            nz == vec![2, 1]
        });
        assert_eq!(eval(&vals, &SymFunc::Monomial(lam)), want);
    }

    #[test]
    fn products_and_combinations() {
        let vals = [1, 2, 3];
        let f = SymFunc::Product(vec![SymFunc::Complete(2), SymFunc::Elementary(1)]);
        assert_eq!(eval(&vals, &f), eval(&vals, &SymFunc::Complete(2)) * 6);
        let g = SymFunc::Combination(vec![
            (BigInt::from(2), SymFunc::PowerSum(2)),
            (BigInt::from(-1), SymFunc::Complete(2)),
        ]);
        assert_eq!(eval(&vals, &g), 2 * 14 - eval(&vals, &SymFunc::Complete(2)));
        assert_eq!(f.degree(), 3);
    }

    #[test]
    fn parse_generators() {
        assert_eq!("h3".parse::<SymFunc>().unwrap(), SymFunc::Complete(3));
        assert_eq!("e0".parse::<SymFunc>().unwrap(), SymFunc::Elementary(0));
        assert_eq!("p12".parse::<SymFunc>().unwrap(), SymFunc::PowerSum(12));
        assert!("q2".parse::<SymFunc>().is_err());
        assert!("h".parse::<SymFunc>().is_err());
    }
}
