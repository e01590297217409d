//! Generating series `Σ_k v^k_λ z^k` of coefficient families, as closed-form rational
//! functions and their truncated expansions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::catalan;

/// Coefficients of `z^0, ..., z^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least z^0");
        TruncatedSeries { coeffs }
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`. Panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// The coefficients as integers, when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// `Σ c_k z^k` with every coefficient printed exactly, e.g. `z + z^3 + 2/3*z^5`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{c}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Integer polynomial in `z`, lowest degree first.
type ZPoly = Vec<BigInt>;

fn poly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let zero = BigInt::zero();
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect()
}

/// `c z^j`.
fn monomial(c: BigInt, j: usize) -> ZPoly {
    let mut p = vec![BigInt::zero(); j + 1];
    p[j] = c;
    p
}

/// `numerator / denominator` with integer polynomial coefficients, expandable at `z = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionZ {
    numerator: ZPoly,
    denominator: ZPoly,
}

impl RationalFunctionZ {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        if denominator.first().is_none_or(Zero::is_zero) {
            return Err(Error::InvalidInput(
                "denominator must have a nonzero constant term".into(),
            ));
        }
        Ok(RationalFunctionZ {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    fn poly(p: ZPoly) -> Self {
        RationalFunctionZ {
            numerator: p,
            denominator: vec![BigInt::one()],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.denominator == other.denominator {
            return RationalFunctionZ {
                numerator: poly_add(&self.numerator, &other.numerator),
                denominator: self.denominator.clone(),
            };
        }
        RationalFunctionZ {
            numerator: poly_add(
                &poly_mul(&self.numerator, &other.denominator),
                &poly_mul(&other.numerator, &self.denominator),
            ),
            denominator: poly_mul(&self.denominator, &other.denominator),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunctionZ {
            numerator: poly_mul(&self.numerator, &other.numerator),
            denominator: poly_mul(&self.denominator, &other.denominator),
        }
    }

    /// `c z^j · self`.
    pub fn times_monomial(&self, c: i64, j: usize) -> Self {
        self.mul(&Self::poly(monomial(BigInt::from(c), j)))
    }

    /// `self / (1 - z^2)`.
    fn over_one_minus_z2(&self) -> Self {
        RationalFunctionZ {
            numerator: self.numerator.clone(),
            denominator: poly_mul(&self.denominator, &one_minus_sq(1)),
        }
    }

    /// Power-series expansion to order `order` by long division.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let d0 = BigRational::from_integer(self.denominator[0].clone());
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut v = BigRational::from_integer(self.numerator.get(k).cloned().unwrap_or_default());
            for j in 1..=k.min(self.denominator.len() - 1) {
                v -= BigRational::from_integer(self.denominator[j].clone()) * &out[k - j];
            }
            out.push(v / &d0);
        }
        TruncatedSeries::new(out)
    }
}

/// `1 - j² z²`.
fn one_minus_sq(j: usize) -> ZPoly {
    vec![BigInt::one(), BigInt::zero(), -BigInt::from(j * j)]
}

/// `∏_{j=1}^{n-1} (1 - j² z²)`.
fn cycle_denominator(n: usize) -> ZPoly {
    (1..n).fold(vec![BigInt::one()], |acc, j| poly_mul(&acc, &one_minus_sq(j)))
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(what.to_string()))
    }
}

/// `Σ_k a^k_{(n)} z^k = Cat_{n-1} z^{n-1} / ∏_{j=1}^{n-1} (1 - j² z²)`, `n ≥ 2`.
/// Since `(n)` has no part 1, this is also the series of the `c^k_{(n)}`.
pub fn cycle_rational(n: usize) -> Result<RationalFunctionZ> {
    need(n >= 2, "the cycle series needs n ≥ 2")?;
    RationalFunctionZ::new(monomial(catalan(n - 1), n - 1), cycle_denominator(n))
}

/// `Σ_k a^k_{(n-1,1)} z^k
///  = ((n-1) Cat_{n-1} z^n + (1 - (n-1)² z²) Cat_{n-2} z^{n-2}) / ∏_{j=1}^{n-1} (1 - j² z²)`.
pub fn hook_rational(n: usize) -> Result<RationalFunctionZ> {
    need(n >= 3, "the hook series needs n ≥ 3")?;
    let lead = monomial(BigInt::from(n - 1) * catalan(n - 1), n);
    let low = poly_mul(&one_minus_sq(n - 1), &monomial(catalan(n - 2), n - 2));
    RationalFunctionZ::new(poly_add(&lead, &low), cycle_denominator(n))
}

/// `Σ_k c^k_{(n-1,1)} z^k = (n-1) Cat_{n-1} z^n / ∏_{j=1}^{n-1} (1 - j² z²)`.
pub fn hook_c_rational(n: usize) -> Result<RationalFunctionZ> {
    need(n >= 3, "the hook series needs n ≥ 3")?;
    RationalFunctionZ::new(
        monomial(BigInt::from(n - 1) * catalan(n - 1), n),
        cycle_denominator(n),
    )
}

pub fn cycle_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(cycle_rational(n)?.expand(order))
}

pub fn hook_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(hook_rational(n)?.expand(order))
}

pub fn hook_c_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(hook_c_rational(n)?.expand(order))
}

/// The two shapes whose `c`-series are obtained by solving the coupled relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvedShape {
    /// `(n-2, 1, 1)`.
    TwoOnes,
    /// `(n-2, 2)`.
    Two,
}

impl FromStr for SolvedShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F211" | "211" => Ok(SolvedShape::TwoOnes),
            "F22" | "22" => Ok(SolvedShape::Two),
            _ => Err(Error::InvalidInput(format!("unknown solved shape {s:?}"))),
        }
    }
}

/// `c`-series of `(n-2,1,1)` or `(n-2,2)`, `n ≥ 4`:
///
/// `F_{(n-2,1,1)} = z² (n(n-2) F_{(n)} + 2z(n-2) F_{(n-1)} + F_{(n-2)}) / (1 - z²)`
///
/// `F_{(n-2,2)} = (z ((n-2) F_{(n)} + 2 F_{(n-2,1)} + F_{(n-2)}) + z² (n-2) F_{(n-1,1)}) / (1 - z²)`
///
/// For `n = 4` the term `F_{(n-2)} = F_{(2)}` is the cycle series at 2.
pub fn solved_f_rational(shape: SolvedShape, n: usize) -> Result<RationalFunctionZ> {
    need(n >= 4, "the solved series need n ≥ 4")?;
    let m = i64::try_from(n).expect("small n");
    let f_n = cycle_rational(n)?;
    let f_n2 = cycle_rational(n - 2)?;
    let inner = match shape {
        SolvedShape::TwoOnes => f_n
            .times_monomial(m * (m - 2), 0)
            .add(&cycle_rational(n - 1)?.times_monomial(2 * (m - 2), 1))
            .add(&f_n2)
            .times_monomial(1, 2),
        SolvedShape::Two => f_n
            .times_monomial(m - 2, 0)
            .add(&hook_c_rational(n - 1)?.times_monomial(2, 0))
            .add(&f_n2)
            .times_monomial(1, 1)
            .add(&hook_c_rational(n)?.times_monomial(m - 2, 2)),
    };
    Ok(inner.over_one_minus_z2())
}

pub fn solved_f_series(shape: SolvedShape, n: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(solved_f_rational(shape, n)?.expand(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(ints(&cycle_series(2, 5).unwrap()), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(ints(&cycle_series(4, 3).unwrap())[3], 5);
        assert_eq!(ints(&cycle_series(3, 2).unwrap())[2], 2);
        assert_eq!(ints(&cycle_series(4, 5).unwrap()), vec![0, 0, 0, 5, 0, 70]);
    }

    #[test]
    fn expansion_by_division() {
        // 1 / (1 - z) = 1 + z + z² + ...
        let r = RationalFunctionZ::new(vec![BigInt::one()], vec![BigInt::one(), -BigInt::one()]).unwrap();
        assert_eq!(ints(&r.expand(4)), vec![1, 1, 1, 1, 1]);
        assert!(RationalFunctionZ::new(vec![BigInt::one()], vec![BigInt::zero(), BigInt::one()]).is_err());
    }

    #[test]
    fn sums_with_distinct_denominators() {
        let a = RationalFunctionZ::new(vec![BigInt::one()], vec![BigInt::one(), -BigInt::one()]).unwrap();
        let b = RationalFunctionZ::new(vec![BigInt::one()], vec![BigInt::one(), BigInt::one()]).unwrap();
        // 1/(1-z) + 1/(1+z) = 2/(1-z²)
        assert_eq!(ints(&a.add(&b).expand(5)), vec![2, 0, 2, 0, 2, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(cycle_series(2, 3).unwrap().to_string(), "z + z^3 + O(z^4)");
    }

    #[test]
    fn domain_errors() {
        assert!(cycle_series(1, 3).is_err());
        assert!(hook_series(2, 3).is_err());
        assert!(solved_f_series(SolvedShape::Two, 3, 3).is_err());
        assert_eq!("F211".parse::<SolvedShape>().unwrap(), SolvedShape::TwoOnes);
    }
}
