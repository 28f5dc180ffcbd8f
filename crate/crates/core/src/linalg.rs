//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let p = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
                let w = &f * &inv[col][c];
                inv[r][c] -= w;
            }
        }
    }
    Ok(inv)
}

/// Determinants of the leading principal submatrices, sizes 1..=n.
pub fn leading_minors(m: &Matrix) -> Vec<Rational> {
    (1..=m.len())
        .map(|t| {
            let sub: Matrix = m[..t].iter().map(|row| row[..t].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

pub fn is_positive_definite(m: &Matrix) -> bool {
    leading_minors(m).iter().all(|d| *d > Rational::zero())
}

/// Kronecker product, row index `(i, s)` flattened as `i * b.len() + s`.
pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for s in 0..m {
                for t in 0..m {
                    out[i * m + s][j * m + t] = &a[i][j] * &b[s][t];
                }
            }
        }
    }
    out
}

/// `xᵀ m y` for integer vectors.
pub fn bilinear_int(m: &Matrix, x: &[i64], y: &[i64]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if *yj != 0 && !m[i][j].is_zero() {
                acc += &m[i][j] * Rational::from_integer((xi * yj).into());
            }
        }
    }
    acc
}

/// `xᵀ m y` for rational vectors.
pub fn bilinear(m: &Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            acc += &m[i][j] * xi * yj;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![int(1), rat(-1, 2)], vec![rat(-1, 2), rat(1, 2)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![int(2), int(2)], vec![int(2), int(4)]]);
        assert_eq!(determinant(&m), rat(1, 4));
    }

    #[test]
    fn singular_is_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(inverse(&m), Err(Error::Singular));
        assert_eq!(determinant(&m), int(0));
    }
}
