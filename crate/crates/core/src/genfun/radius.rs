//! Radius-of-convergence bookkeeping.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::numerics::Rational;

/// A nonnegative rational or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(r) => Some(r),
            Extended::Infinite => None,
        }
    }

    /// `value < self`, with everything finite below `+∞`.
    pub fn exceeds(&self, value: &Rational) -> bool {
        match self {
            Extended::Finite(r) => value < r,
            Extended::Infinite => true,
        }
    }

    pub fn div(&self, by: &Rational) -> Extended {
        match self {
            Extended::Finite(r) if !by.is_zero() => Extended::Finite(r / by),
            _ => Extended::Infinite,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(r) => write!(f, "{r}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Radius of convergence of a Maclaurin series, with how much is known
/// about it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Radius {
    /// The true radius.
    Exact(Extended),
    /// A proven lower bound; the true radius may be larger.
    LowerBound(Extended),
    /// Not determined. The carried value is the smallest operand radius and
    /// is not a proven bound; analytic evaluation is refused.
    Unknown(Extended),
}

impl Radius {
    pub fn value(&self) -> &Extended {
        match self {
            Radius::Exact(v) | Radius::LowerBound(v) | Radius::Unknown(v) => v,
        }
    }

    pub fn is_known(&self) -> bool {
        !matches!(self, Radius::Unknown(_))
    }

    pub(crate) fn is_exact_infinite(&self) -> bool {
        matches!(self, Radius::Exact(Extended::Infinite))
    }

    /// Conservative radius of a sum or product.
    pub(crate) fn combine_min(a: &Radius, b: &Radius) -> Radius {
        let v = a.value().clone().min(b.value().clone());
        if !a.is_known() || !b.is_known() {
            Radius::Unknown(v)
        } else if v == Extended::Infinite {
            Radius::Exact(v)
        } else {
            Radius::LowerBound(v)
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Exact(v) => write!(f, "{v}"),
            Radius::LowerBound(v) => write!(f, ">= {v}"),
            Radius::Unknown(v) => write!(f, "unknown (operands >= {v})"),
        }
    }
}

/// Distance from the origin to the nearest complex zero of a polynomial of
/// degree at most 2 (coefficients low to high).
///
/// Exact when the root modulus is rational, otherwise a rigorous rational
/// lower bound.
pub(crate) fn root_radius(poly: &[Rational]) -> Radius {
    const SCALE: u64 = 1 << 40;
    let zero = Rational::zero();
    let b0 = poly.first().unwrap_or(&zero);
    let b1 = poly.get(1).unwrap_or(&zero);
    let b2 = poly.get(2).unwrap_or(&zero);
    if b0.is_zero() {
        return Radius::Exact(Extended::Finite(Rational::zero()));
    }
    if b2.is_zero() {
        if b1.is_zero() {
            return Radius::Exact(Extended::Infinite);
        }
        return Radius::Exact(Extended::Finite((b0 / b1).abs()));
    }
    let disc = b1 * b1 - Rational::from(4) * b0 * b2;
    if disc.is_negative() {
        // Complex conjugate pair: |r|^2 = b0 / b2.
        let sq = (b0 / b2).abs();
        return match sq.sqrt_exact() {
            Some(r) => Radius::Exact(Extended::Finite(r)),
            None => Radius::LowerBound(Extended::Finite(sq.sqrt_floor(SCALE))),
        };
    }
    // Real roots; the smaller modulus is 2|b0| / (|b1| + sqrt(disc)).
    let two_b0 = Rational::from(2) * b0.abs();
    match disc.sqrt_exact() {
        Some(s) => Radius::Exact(Extended::Finite(two_b0 / (b1.abs() + s))),
        None => {
            let upper = disc.sqrt_floor(SCALE) + Rational::new(1, SCALE).expect("nonzero");
            Radius::LowerBound(Extended::Finite(two_b0 / (b1.abs() + upper)))
        }
    }
}
