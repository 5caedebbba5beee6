//! Schur polynomials evaluated at rational points.
//!
//! [`bialternant`] is the production path: a ratio of two exact determinants.
//! [`ssyt_schur_oracle`] sums over semistandard Young tableaux and never
//! touches a determinant, so the two can check each other.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numerics::{det_exact, MatrixQ, NumericsError, Rational};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("points must be pairwise distinct (entries {first} and {second} are both {value})")]
    RepeatedPoints { first: usize, second: usize, value: Rational },
    #[error("need at least one point")]
    NoPoints,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// An ordered tuple of rational evaluation points.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PointVector(Vec<Rational>);

impl PointVector {
    pub fn new(values: Vec<Rational>) -> Self {
        PointVector(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First pair of equal entries, if any.
    pub fn repeated_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] == self.0[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn ensure_distinct(&self) -> Result<(), SchurError> {
        match self.repeated_pair() {
            Some((first, second)) => Err(SchurError::RepeatedPoints { first, second, value: self.0[first].clone() }),
            None => Ok(()),
        }
    }

    /// Entry `i` of the result is `self[perm[i]]`. Panics on a bad index.
    pub fn permuted(&self, perm: &[usize]) -> PointVector {
        PointVector(perm.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> PointVector {
        PointVector(self.0.iter().map(f).collect())
    }

    /// Largest absolute value; zero for an empty vector.
    pub fn max_abs(&self) -> Rational {
        self.0.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero)
    }
}

impl From<Vec<Rational>> for PointVector {
    fn from(v: Vec<Rational>) -> Self {
        PointVector(v)
    }
}

impl fmt::Display for PointVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PointVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated rationals, e.g. `1/2,1/3`.
impl FromStr for PointVector {
    type Err = NumericsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',').map(str::parse).collect::<Result<Vec<_>, _>>().map(PointVector)
    }
}

/// `∏_{i<j} (x_i - x_j)`, which equals `det(x_i^(n-j))`.
///
/// Zero when two entries coincide; 1 for a single point.
pub fn vandermonde(xs: &PointVector) -> Rational {
    let v = xs.values();
    let mut acc = Rational::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= &(&v[i] - &v[j]);
        }
    }
    acc
}

/// The alternant `det(x_i^(k_j))` for an exponent vector `k`.
pub fn alternant(exponents: &[usize], xs: &PointVector) -> Result<Rational, SchurError> {
    let v = xs.values();
    let m = MatrixQ::from_fn(v.len(), |i, j| v[i].pow(exponents[j]))?;
    Ok(det_exact(&m))
}

/// `s_λ(xs)` via the bialternant `det(x_i^(λ_j+n-j)) / det(x_i^(n-j))`.
///
/// Returns 0 without further work when `l(λ) > n`.
pub fn bialternant(lambda: &Partition, xs: &PointVector) -> Result<Rational, SchurError> {
    let n = xs.len();
    if n == 0 {
        return Err(SchurError::NoPoints);
    }
    if lambda.len() > n {
        return Ok(Rational::zero());
    }
    xs.ensure_distinct()?;
    let exponents: Vec<usize> = (1..=n).map(|j| lambda.part(j) + n - j).collect();
    let numerator = alternant(&exponents, xs)?;
    Ok(numerator.checked_div(&vandermonde(xs))?)
}

/// `s_λ(xs)` as a sum over semistandard Young tableaux of shape `λ` with
/// entries in `1..=n`, each contributing `∏ x_i^(#i)`.
///
/// Exhaustive; meant for `|λ| <= ~10`, `n <= 4`. Repeated points are fine.
pub fn ssyt_schur_oracle(lambda: &Partition, xs: &PointVector) -> Rational {
    let n = xs.len();
    if lambda.len() > n {
        return Rational::zero();
    }
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut counts = vec![0usize; n];
    let mut total = Rational::zero();
    fill(0, &cells, &mut grid, &mut counts, xs.values(), &mut total);
    total
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    xs: &[Rational],
    total: &mut Rational,
) {
    if idx == cells.len() {
        let weight: Rational = counts.iter().zip(xs).map(|(&c, x)| x.pow(c)).product();
        *total += &weight;
        return;
    }
    let (r, c) = cells[idx];
    // Rows weakly increase, columns strictly increase; entries are 1-based.
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..=xs.len() {
        grid[r][c] = v;
        counts[v - 1] += 1;
        fill(idx + 1, cells, grid, counts, xs, total);
        counts[v - 1] -= 1;
    }
    grid[r][c] = 0;
}
