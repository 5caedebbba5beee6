//! Square rational matrices and their determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{NumericsError, Rational};

/// Dense `n x n` matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixQ {
    n: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, NumericsError> {
        let n = rows.len();
        if n == 0 {
            return Err(NumericsError::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(NumericsError::NotSquare { rows: n, cols: bad.len() });
        }
        Ok(MatrixQ { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds entry `(i, j)` from `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self, NumericsError> {
        if n == 0 {
            return Err(NumericsError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Ok(MatrixQ { n, entries })
    }

    pub fn identity(n: usize) -> Result<Self, NumericsError> {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> MatrixQ {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.get(i, j).clone());
            }
        }
        MatrixQ { n, entries }
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<MatrixQ, NumericsError> {
        if self.n != other.n {
            return Err(NumericsError::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        MatrixQ::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.iter().map(Rational::to_f64).collect()).collect()
    }

    pub fn det(&self) -> Rational {
        det_exact(self)
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Each row is first scaled by the lcm of its denominators so that the
/// elimination runs over integers; the product of the scale factors is divided
/// back out at the end. A singular matrix gives exactly zero.
pub fn det_exact(m: &MatrixQ) -> Rational {
    let n = m.n;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m.rows() {
        let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        a.push(row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Exact by Sylvester's identity.
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let det = if negate { -prev } else { prev };
    Rational::new(det, scale).expect("row scale factors are nonzero")
}

/// Floating-point determinant by LU with partial pivoting.
///
/// Panics if `rows` is not square.
pub fn det_float(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "det_float needs a square matrix");
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut det = 1.0;
    for k in 0..n {
        let pivot = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).unwrap_or(k);
        if a[pivot][k] == 0.0 {
            return 0.0;
        }
        if pivot != k {
            a.swap(pivot, k);
            det = -det;
        }
        let akk = a[k][k];
        det *= akk;
        for i in k + 1..n {
            let factor = a[i][k] / akk;
            if factor != 0.0 {
                let (upper, lower) = a.split_at_mut(i);
                for (dst, src) in lower[0][k + 1..].iter_mut().zip(&upper[k][k + 1..]) {
                    *dst -= factor * src;
                }
            }
        }
    }
    det
}
