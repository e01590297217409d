//! Exact binomial coefficients and Catalan numbers.

use num_bigint::BigInt;
use num_traits::Zero;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// `Cat_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
        let cats: Vec<BigInt> = (0..8).map(catalan).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].into_iter().map(BigInt::from).collect();
        assert_eq!(cats, want);
    }

    #[test]
    fn catalan_convolution() {
        // Cat_{n+1} = Σ Cat_i Cat_{n-i}
        for n in 0..20 {
            let s: BigInt = (0..=n).map(|i| catalan(i) * catalan(n - i)).sum();
            assert_eq!(s, catalan(n + 1));
        }
    }
}
