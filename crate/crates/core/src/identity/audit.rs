//! Printed closed forms of `G_λ` for the worked examples, compared against
//! `G_λ` computed from derivatives at 0.
//!
//! Mismatches are reported as found. The engine never uses the claimed
//! values; it always works from the derivatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::genfun::{g_lambda, Catalog, GenFun};
use crate::numerics::Rational;
use crate::partitions::{c_lambda, p_lambda, parity_class, ParityClass, Partition};

use super::IdentityError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditExample {
    /// `1/(1-x^2)`: `G_λ = C_λ` on even-class partitions, else 0.
    GeomSq,
    /// `1/(1+x^2)`: `G_λ = (-1)^((2|λ| - n(n-1))/4) C_λ` on even-class, else 0.
    GeomSqNeg,
    /// `exp(x)`: `G_λ = 1`.
    Exp,
    /// `sinh(x)`: `G_λ = 1` on odd-class, else 0.
    Sinh,
    /// `sin(x)`: `G_λ = (-1)^((2|λ| + n(n+1))/4)` on odd-class, else 0.
    Sin,
    /// `ln(1-x)`: `G_λ = C_λ / P_λ` with `P_λ` the product of the parts.
    Log,
}

impl AuditExample {
    pub const ALL: [AuditExample; 6] = [
        AuditExample::GeomSq,
        AuditExample::GeomSqNeg,
        AuditExample::Exp,
        AuditExample::Sinh,
        AuditExample::Sin,
        AuditExample::Log,
    ];

    pub fn catalog(self) -> Catalog {
        match self {
            AuditExample::GeomSq => Catalog::GeomSq,
            AuditExample::GeomSqNeg => Catalog::GeomSqNeg,
            AuditExample::Exp => Catalog::Exp,
            AuditExample::Sinh => Catalog::Sinh,
            AuditExample::Sin => Catalog::Sin,
            AuditExample::Log => Catalog::Log,
        }
    }

    pub fn id(self) -> &'static str {
        self.catalog().id()
    }
}

impl fmt::Display for AuditExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AuditExample {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AuditExample::ALL.into_iter().find(|e| e.id() == s.trim()).ok_or_else(|| {
            let ids: Vec<_> = AuditExample::ALL.iter().map(|e| e.id()).collect();
            format!("unknown example '{s}' (expected one of {})", ids.join(", "))
        })
    }
}

/// `matches` is true exactly when `claimed == computed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub example: AuditExample,
    pub lambda: Partition,
    pub claimed: Rational,
    pub computed: Rational,
    pub matches: bool,
}

/// Exponent `e` of the printed sign `(-1)^e`, when the example has one and
/// `λ` lies in the class where it applies.
///
/// On that class the exponent is always an integer: for even-class `λ` the
/// staircase sum is even, and for odd-class it has the parity of `n`.
pub fn claimed_sign_exponent(
    example: AuditExample,
    lambda: &Partition,
    n: usize,
) -> Result<Option<i64>, IdentityError> {
    let class = parity_class(lambda, n)?;
    let w = lambda.weight() as i64;
    let n = n as i64;
    let numerator = match (example, class) {
        (AuditExample::GeomSqNeg, ParityClass::Even) => 2 * w - n * (n - 1),
        (AuditExample::Sin, ParityClass::Odd) => 2 * w + n * (n + 1),
        _ => return Ok(None),
    };
    debug_assert_eq!(numerator.rem_euclid(4), 0);
    Ok(Some(numerator.div_euclid(4)))
}

/// The printed closed form of `G_λ` for `example`.
pub fn claimed_coefficient(example: AuditExample, lambda: &Partition, n: usize) -> Result<Rational, IdentityError> {
    let class = parity_class(lambda, n)?;
    let sign = claimed_sign_exponent(example, lambda, n)?.map(Rational::parity_sign);
    Ok(match example {
        AuditExample::GeomSq => match class {
            ParityClass::Even => c_lambda(lambda, n)?,
            _ => Rational::zero(),
        },
        AuditExample::GeomSqNeg => match sign {
            Some(s) => s * c_lambda(lambda, n)?,
            None => Rational::zero(),
        },
        AuditExample::Exp => Rational::one(),
        AuditExample::Sinh => match class {
            ParityClass::Odd => Rational::one(),
            _ => Rational::zero(),
        },
        AuditExample::Sin => sign.unwrap_or_else(Rational::zero),
        AuditExample::Log => c_lambda(lambda, n)?.checked_div(&p_lambda(lambda))?,
    })
}

/// One record per partition in `lambdas`, in the order given.
pub fn audit_example(
    example: AuditExample,
    n: usize,
    lambdas: &[Partition],
) -> Result<Vec<AuditRecord>, IdentityError> {
    let g = GenFun::catalog(example.catalog());
    lambdas
        .iter()
        .map(|lambda| {
            let claimed = claimed_coefficient(example, lambda, n)?;
            let computed = g_lambda(&g, lambda, n)?;
            let matches = claimed == computed;
            Ok(AuditRecord { example, lambda: lambda.clone(), claimed, computed, matches })
        })
        .collect()
}
