//! Exact rationals, truncated power series, and determinant kernels.

mod matrix;
mod rational;
mod series;

pub use matrix::{det_exact, det_float, MatrixQ};
pub use rational::{rat, Rational};
pub use series::{series_add, series_mul, series_reciprocal, SeriesTrunc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot parse {0:?} as a rational (expected p or p/q)")]
    ParseRational(String),
}
