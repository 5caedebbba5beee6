//! Expression trees for parsed generating functions.

use std::fmt;

use crate::numerics::{NumericsError, Rational, SeriesTrunc};

use super::radius::{root_radius, Extended, Radius};
use super::{GenFunError, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Exp,
    Sin,
    Sinh,
    Ln,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sin => "sin",
            Func::Sinh => "sinh",
            Func::Ln => "ln",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        match name {
            "exp" => Some(Func::Exp),
            "sin" => Some(Func::Sin),
            "sinh" => Some(Func::Sinh),
            "ln" => Some(Func::Ln),
            _ => None,
        }
    }

    /// Maclaurin coefficients `0..=order` of the outer function, in the form
    /// used for composition: exp/sin/sinh of `u`, and `ln(1 + u)`.
    fn outer_coeffs(self, order: usize) -> Vec<Rational> {
        (0..=order)
            .map(|k| match self {
                Func::Exp => inv_factorial(k),
                Func::Sinh if k % 2 == 1 => inv_factorial(k),
                Func::Sin if k % 2 == 1 => Rational::parity_sign(((k - 1) / 2) as i64) * inv_factorial(k),
                Func::Ln if k >= 1 => Rational::parity_sign(k as i64 + 1) * Rational::from(k as i64).recip().unwrap(),
                _ => Rational::zero(),
            })
            .collect()
    }
}

fn inv_factorial(k: usize) -> Rational {
    Rational::factorial(k).recip().expect("factorials are positive")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Rational),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, usize),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// Truncated Maclaurin series up to `x^order`.
    pub fn series(&self, order: usize) -> Result<SeriesTrunc, GenFunError> {
        Ok(match self {
            Expr::Const(c) => SeriesTrunc::constant(c.clone(), order),
            Expr::Var => SeriesTrunc::monomial(1, order),
            Expr::Neg(e) => e.series(order)?.neg(),
            Expr::Add(a, b) => a.series(order)?.add(&b.series(order)?),
            Expr::Sub(a, b) => a.series(order)?.sub(&b.series(order)?),
            Expr::Mul(a, b) => a.series(order)?.mul(&b.series(order)?),
            Expr::Div(a, b) => {
                let den = b.series(order)?.reciprocal().map_err(|e| match e {
                    NumericsError::ZeroConstantTerm => GenFunError::DivisionByZeroSeries,
                    other => GenFunError::Numerics(other),
                })?;
                a.series(order)?.mul(&den)
            }
            Expr::Pow(e, k) => e.series(order)?.pow(*k),
            Expr::Call(f, arg) => {
                let mut inner = arg.series(order)?;
                if *f == Func::Ln {
                    // ln(c0 + u) with c0 = 1 enforced by validation
                    inner = inner.sub(&SeriesTrunc::one(order));
                }
                inner.compose_into(&f.outer_coeffs(order)).map_err(|_| GenFunError::UnsupportedComposition {
                    func: f.name().to_string(),
                    reason: "argument has the wrong constant term".to_string(),
                })?
            }
        })
    }

    /// Exact coefficient vector when the expression is a polynomial: no
    /// function calls and division only by nonzero constants.
    pub fn as_polynomial(&self) -> Option<Vec<Rational>> {
        let poly = match self {
            Expr::Const(c) => vec![c.clone()],
            Expr::Var => vec![Rational::zero(), Rational::one()],
            Expr::Neg(e) => e.as_polynomial()?.iter().map(|c| -c).collect(),
            Expr::Add(a, b) => poly_add(&a.as_polynomial()?, &b.as_polynomial()?, false),
            Expr::Sub(a, b) => poly_add(&a.as_polynomial()?, &b.as_polynomial()?, true),
            Expr::Mul(a, b) => poly_mul(&a.as_polynomial()?, &b.as_polynomial()?),
            Expr::Div(a, b) => {
                let den = trim(b.as_polynomial()?);
                if den.len() != 1 || den[0].is_zero() {
                    return None;
                }
                let inv = den[0].recip().ok()?;
                a.as_polynomial()?.iter().map(|c| c * &inv).collect()
            }
            Expr::Pow(e, k) => {
                let base = e.as_polynomial()?;
                let mut acc = vec![Rational::one()];
                for _ in 0..*k {
                    acc = poly_mul(&acc, &base);
                }
                acc
            }
            Expr::Call(..) => return None,
        };
        Some(trim(poly))
    }

    /// Checks function-argument restrictions and that every denominator has a
    /// nonzero constant term.
    pub fn validate(&self) -> Result<(), GenFunError> {
        match self {
            Expr::Const(_) | Expr::Var => Ok(()),
            Expr::Neg(e) | Expr::Pow(e, _) => e.validate(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.validate()?;
                b.validate()
            }
            Expr::Div(a, b) => {
                a.validate()?;
                b.validate()?;
                let c0 = b.series(0)?;
                if c0.coeffs()[0].is_zero() {
                    return Err(GenFunError::DivisionByZeroSeries);
                }
                Ok(())
            }
            Expr::Call(f, arg) => {
                let poly = arg.as_polynomial().ok_or_else(|| GenFunError::UnsupportedComposition {
                    func: f.name().to_string(),
                    reason: "argument must be a polynomial in x".to_string(),
                })?;
                let c0 = poly.first().cloned().unwrap_or_else(Rational::zero);
                let (ok, want) = match f {
                    Func::Ln => (c0.is_one(), "1"),
                    _ => (c0.is_zero(), "0"),
                };
                if !ok {
                    return Err(GenFunError::UnsupportedComposition {
                        func: f.name().to_string(),
                        reason: format!("argument must have constant term {want}, found {c0}"),
                    });
                }
                Ok(())
            }
        }
    }

    /// Structural parity of the denoted function.
    pub(crate) fn parity_lattice(&self) -> ParityLattice {
        use ParityLattice::*;
        match self {
            Expr::Const(c) if c.is_zero() => Zero,
            Expr::Const(_) => Even,
            Expr::Var => Odd,
            Expr::Neg(e) => e.parity_lattice(),
            Expr::Add(a, b) | Expr::Sub(a, b) => a.parity_lattice().join(b.parity_lattice()),
            Expr::Mul(a, b) | Expr::Div(a, b) => a.parity_lattice().times(b.parity_lattice()),
            Expr::Pow(e, k) => {
                let p = e.parity_lattice();
                if *k == 0 {
                    Even
                } else if *k % 2 == 0 {
                    p.times(p)
                } else {
                    p
                }
            }
            Expr::Call(f, arg) => match (f, arg.parity_lattice()) {
                (_, Zero) => match f {
                    Func::Exp => Even,
                    _ => Zero,
                },
                (Func::Exp | Func::Ln, Even) => Even,
                (Func::Sin | Func::Sinh, p @ (Even | Odd)) => p,
                _ => Neither,
            },
        }
    }

    pub fn radius(&self) -> Radius {
        match self {
            Expr::Const(_) | Expr::Var => Radius::Exact(Extended::Infinite),
            Expr::Neg(e) => e.radius(),
            Expr::Pow(e, k) => {
                if *k == 0 {
                    Radius::Exact(Extended::Infinite)
                } else {
                    e.radius()
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (ra, rb) = (a.radius(), b.radius());
                // Distinct exact radii cannot cancel: the function with the
                // larger radius is analytic at the nearer singularity.
                if let (Radius::Exact(x), Radius::Exact(y)) = (&ra, &rb) {
                    if x != y {
                        return Radius::Exact(x.clone().min(y.clone()));
                    }
                    if *x == Extended::Infinite {
                        return ra;
                    }
                }
                Radius::combine_min(&ra, &rb)
            }
            Expr::Mul(a, b) => {
                let (ra, rb) = (a.radius(), b.radius());
                if ra.is_exact_infinite() && rb.is_exact_infinite() {
                    return ra;
                }
                Radius::combine_min(&ra, &rb)
            }
            Expr::Div(a, b) => {
                let ra = a.radius();
                let denominator_zero = match b.as_polynomial() {
                    Some(poly) if poly.len() <= 3 => root_radius(&poly),
                    _ => {
                        let lower = ra.value().clone().min(b.radius().value().clone());
                        return Radius::Unknown(lower);
                    }
                };
                // A constant numerator cannot cancel a zero of the denominator.
                let constant_numerator = matches!(a.as_polynomial(), Some(p) if p.len() <= 1);
                if constant_numerator {
                    denominator_zero
                } else {
                    Radius::combine_min(&ra, &denominator_zero)
                }
            }
            Expr::Call(Func::Ln, arg) => match arg.as_polynomial() {
                Some(poly) if poly.len() <= 3 => root_radius(&poly),
                _ => Radius::Unknown(arg.radius().value().clone()),
            },
            Expr::Call(_, _) => Radius::Exact(Extended::Infinite),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ParityLattice {
    Zero,
    Even,
    Odd,
    Neither,
}

impl ParityLattice {
    fn join(self, other: ParityLattice) -> ParityLattice {
        use ParityLattice::*;
        match (self, other) {
            (Zero, p) | (p, Zero) => p,
            (a, b) if a == b => a,
            _ => Neither,
        }
    }

    fn times(self, other: ParityLattice) -> ParityLattice {
        use ParityLattice::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Neither, _) | (_, Neither) => Neither,
            (a, b) if a == b => Even,
            _ => Odd,
        }
    }

    pub(crate) fn to_parity(self) -> Parity {
        match self {
            ParityLattice::Zero | ParityLattice::Even => Parity::Even,
            ParityLattice::Odd => Parity::Odd,
            ParityLattice::Neither => Parity::Neither,
        }
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_add(a: &[Rational], b: &[Rational], subtract: bool) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let zero = Rational::zero();
    (0..len)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            if subtract {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Const(c) if c.is_negative() => 3,
        Expr::Const(c) if !c.is_integer() => 2,
        _ => 5,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
    if precedence(e) < min_prec {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Re-parseable text form.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) if c.is_negative() => write!(f, "-{}", c.abs()),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => write!(f, "x"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_operand(f, e, 3)
            }
            Expr::Add(a, b) => {
                write_operand(f, a, 1)?;
                write!(f, "+")?;
                write_operand(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_operand(f, a, 1)?;
                write!(f, "-")?;
                write_operand(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_operand(f, a, 2)?;
                write!(f, "*")?;
                write_operand(f, b, 3)
            }
            Expr::Div(a, b) => {
                write_operand(f, a, 2)?;
                write!(f, "/")?;
                write_operand(f, b, 3)
            }
            Expr::Pow(e, k) => {
                write_operand(f, e, 5)?;
                write!(f, "^{k}")
            }
            Expr::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}
