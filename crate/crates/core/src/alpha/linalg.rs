//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Square matrix stored by rows.
pub type Matrix = Vec<Vec<BigRational>>;

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = BigRational::one() / &aug[col][col];
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            let (src, dst) = if r < col {
                let (lo, hi) = aug.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = aug.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d -= &f * s;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(a: &Matrix, v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn inverts_and_detects_singular() {
        let a = vec![vec![q(2), q(1), q(0)], vec![q(1), q(3), q(1)], vec![q(0), q(1), q(4)]];
        let inv = inverse(&a).unwrap();
        for i in 0..3 {
            let e: Vec<_> = (0..3).map(|j| inv[j][i].clone()).collect();
            let col = mat_vec(&a, &e);
            for (j, x) in col.iter().enumerate() {
                assert_eq!(*x, if i == j { q(1) } else { q(0) });
            }
        }
        let s = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(inverse(&s).is_none());
    }

    #[test]
    fn needs_row_swaps() {
        let a = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(inverse(&a).unwrap(), a);
    }
}
