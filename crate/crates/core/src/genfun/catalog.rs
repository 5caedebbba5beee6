//! Built-in generating functions with closed-form Maclaurin coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::numerics::Rational;

use super::radius::{Extended, Radius};
use super::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Catalog {
    /// 1/(1-x)
    Geometric,
    /// 1/(1-x^2)
    GeomSq,
    /// 1/(1+x^2)
    GeomSqNeg,
    Exp,
    Sinh,
    Sin,
    /// ln(1-x)
    Log,
}

impl Catalog {
    pub const ALL: [Catalog; 7] = [
        Catalog::Geometric,
        Catalog::GeomSq,
        Catalog::GeomSqNeg,
        Catalog::Exp,
        Catalog::Sinh,
        Catalog::Sin,
        Catalog::Log,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Catalog::Geometric => "geom",
            Catalog::GeomSq => "geomsq",
            Catalog::GeomSqNeg => "geomsqneg",
            Catalog::Exp => "exp",
            Catalog::Sinh => "sinh",
            Catalog::Sin => "sin",
            Catalog::Log => "log",
        }
    }

    /// Canonical expression text; parsing it yields this catalog entry.
    pub fn expression(self) -> &'static str {
        match self {
            Catalog::Geometric => "1/(1-x)",
            Catalog::GeomSq => "1/(1-x^2)",
            Catalog::GeomSqNeg => "1/(1+x^2)",
            Catalog::Exp => "exp(x)",
            Catalog::Sinh => "sinh(x)",
            Catalog::Sin => "sin(x)",
            Catalog::Log => "ln(1-x)",
        }
    }

    /// `c_k = g^(k)(0) / k!`.
    pub fn coeff(self, k: usize) -> Rational {
        let even = k.is_multiple_of(2);
        match self {
            Catalog::Geometric => Rational::one(),
            Catalog::GeomSq if even => Rational::one(),
            Catalog::GeomSqNeg if even => Rational::parity_sign((k / 2) as i64),
            Catalog::Exp => inv_factorial(k),
            Catalog::Sinh if !even => inv_factorial(k),
            Catalog::Sin if !even => Rational::parity_sign(((k - 1) / 2) as i64) * inv_factorial(k),
            Catalog::Log if k > 0 => -Rational::from(k as i64).recip().expect("k > 0"),
            _ => Rational::zero(),
        }
    }

    pub fn radius(self) -> Radius {
        match self {
            Catalog::Geometric | Catalog::GeomSq | Catalog::GeomSqNeg | Catalog::Log => {
                Radius::Exact(Extended::Finite(Rational::one()))
            }
            Catalog::Exp | Catalog::Sinh | Catalog::Sin => Radius::Exact(Extended::Infinite),
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Catalog::GeomSq | Catalog::GeomSqNeg => Parity::Even,
            Catalog::Sinh | Catalog::Sin => Parity::Odd,
            Catalog::Geometric | Catalog::Exp | Catalog::Log => Parity::Neither,
        }
    }

    /// Exact value at `z` for the rational-function entries.
    pub fn closed_form(self, z: &Rational) -> Option<Rational> {
        let one = Rational::one();
        let den = match self {
            Catalog::Geometric => &one - z,
            Catalog::GeomSq => &one - z * z,
            Catalog::GeomSqNeg => &one + z * z,
            _ => return None,
        };
        den.recip().ok()
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::factorial(k).recip().expect("factorials are positive")
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Catalog {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Catalog::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| format!("unknown catalog id {s:?}"))
    }
}
