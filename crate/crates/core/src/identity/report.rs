use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numerics::Rational;
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeTag {
    Exact,
    Analytic,
}

impl fmt::Display for ModeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModeTag::Exact => "exact",
            ModeTag::Analytic => "analytic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    ExactMatch,
    WithinTolerance,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ExactMatch => "ExactMatch",
            Verdict::WithinTolerance => "WithinTolerance",
            Verdict::Fail => "Fail",
        })
    }
}

/// An exact rational (serialized as `"p/q"`) or a float.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Exact(Rational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64(),
            Value::Float(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Float(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Float(v) => write!(f, "{v:e}"),
        }
    }
}

/// One summand `G_λ/C_λ · s_λ(a) · s_λ(x)` of the Schur expansion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub lambda: Partition,
    pub staircase: Vec<usize>,
    #[serde(rename = "G")]
    pub g: Rational,
    #[serde(rename = "C")]
    pub c: Rational,
    pub s_a: Rational,
    pub s_x: Rational,
    pub term: Rational,
}

/// Partial sum and residual after all partitions with staircase exponents up
/// to `k_cap`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub k_cap: usize,
    pub lhs: f64,
    pub residual: f64,
}

/// Outcome of one verification run.
///
/// `verdict` is `ExactMatch` exactly when `residual` is the exact rational
/// zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub mode: ModeTag,
    pub order: usize,
    pub partition_count: usize,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TracePoint>>,
}

impl IdentityReport {
    /// Report for two exact sides; the verdict is decided by exact equality.
    pub fn exact(order: usize, partition_count: usize, lhs: Rational, rhs: Rational) -> Self {
        let residual = &lhs - &rhs;
        let verdict = if residual.is_zero() { Verdict::ExactMatch } else { Verdict::Fail };
        IdentityReport {
            mode: ModeTag::Exact,
            order,
            partition_count,
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
            residual: Value::Exact(residual),
            verdict,
            terms: None,
            trace: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}
