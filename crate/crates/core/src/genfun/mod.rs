//! Generating functions `g`: a catalog of closed forms, a parsed expression
//! front-end, and the derivative products `G_λ = ∏ g^(k_l)(0)`.

mod analytic;
mod catalog;
mod expr;
mod parser;
mod radius;

use std::fmt;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{NumericsError, Rational, SeriesTrunc};
use crate::partitions::{staircase, Partition, PartitionError};

pub use analytic::eval_analytic;
pub use catalog::Catalog;
pub use expr::{Expr, Func};
pub use parser::parse_expr;
pub use radius::{Extended, Radius};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenFunError {
    #[error("syntax error at position {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax { position: usize, expected: Vec<String>, found: String },
    #[error("unsupported composition in {func}(...): {reason}")]
    UnsupportedComposition { func: String, reason: String },
    #[error("denominator series has zero constant term")]
    DivisionByZeroSeries,
    #[error("|{z}| is not inside the radius of convergence {radius}")]
    OutsideRadius { z: Rational, radius: Extended },
    #[error("analytic evaluation is not supported for {0}")]
    UnsupportedAnalyticEval(String),
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "Even",
            Parity::Odd => "Odd",
            Parity::Neither => "None",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Catalog(Catalog),
    /// Coefficients `b_0..=b_m`.
    Polynomial(Vec<Rational>),
    Expr(Expr),
}

/// A generating function with exact Maclaurin coefficients on demand.
///
/// Coefficients of parsed expressions are computed by series arithmetic and
/// memoized; the cache only ever grows, and any extension recomputes from the
/// expression, so every read sees the same values.
pub struct GenFun {
    source: Source,
    text: String,
    radius: Radius,
    parity: Parity,
    cache: RwLock<Vec<Rational>>,
}

impl GenFun {
    pub fn catalog(entry: Catalog) -> Self {
        GenFun {
            source: Source::Catalog(entry),
            text: entry.expression().to_string(),
            radius: entry.radius(),
            parity: entry.parity(),
            cache: RwLock::new(Vec::new()),
        }
    }

    /// `b_0 + b_1 x + ... + b_m x^m`. An empty slice is the zero polynomial.
    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        let text = polynomial_text(&coeffs);
        let parity = polynomial_parity(&coeffs);
        GenFun {
            source: Source::Polynomial(coeffs),
            text,
            radius: Radius::Exact(Extended::Infinite),
            parity,
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn radius(&self) -> &Radius {
        &self.radius
    }

    pub fn as_catalog(&self) -> Option<Catalog> {
        match self.source {
            Source::Catalog(c) => Some(c),
            _ => None,
        }
    }

    /// Polynomial coefficients, when `g` is a polynomial.
    pub fn polynomial_coeffs(&self) -> Option<&[Rational]> {
        match &self.source {
            Source::Polynomial(b) => Some(b),
            _ => None,
        }
    }

    /// `c_k`, the k-th Maclaurin coefficient.
    pub fn coeff(&self, k: usize) -> Rational {
        match &self.source {
            Source::Catalog(c) => c.coeff(k),
            Source::Polynomial(b) => b.get(k).cloned().unwrap_or_else(Rational::zero),
            Source::Expr(e) => {
                if let Some(c) = self.cache.read().expect("cache lock").get(k) {
                    return c.clone();
                }
                let mut cache = self.cache.write().expect("cache lock");
                if k >= cache.len() {
                    let order = k.max(2 * cache.len()).max(15);
                    let series = e.series(order).expect("validated at construction");
                    *cache = series.into_coeffs();
                }
                cache[k].clone()
            }
        }
    }

    /// `c_0..=c_order` as a truncated series.
    pub fn series(&self, order: usize) -> SeriesTrunc {
        if let Source::Expr(_) = self.source {
            self.coeff(order);
            let cache = self.cache.read().expect("cache lock");
            return SeriesTrunc::new(cache[..=order].to_vec());
        }
        SeriesTrunc::new((0..=order).map(|k| self.coeff(k)).collect())
    }
}

impl Clone for GenFun {
    fn clone(&self) -> Self {
        GenFun {
            source: self.source.clone(),
            text: self.text.clone(),
            radius: self.radius.clone(),
            parity: self.parity,
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for GenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenFun")
            .field("text", &self.text)
            .field("radius", &self.radius)
            .field("parity", &self.parity)
            .finish()
    }
}

impl fmt::Display for GenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn polynomial_text(b: &[Rational]) -> String {
    let mut terms = Vec::new();
    for (k, c) in b.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let term = if mono.is_empty() {
            format!("{c}")
        } else if c.is_one() {
            mono
        } else if c.is_integer() {
            format!("{c}*{mono}")
        } else {
            format!("({c})*{mono}")
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+").replace("+-", "-")
    }
}

fn polynomial_parity(b: &[Rational]) -> Parity {
    let has_even = b.iter().step_by(2).any(|c| !c.is_zero());
    let has_odd = b.iter().skip(1).step_by(2).any(|c| !c.is_zero());
    match (has_even, has_odd) {
        (_, false) => Parity::Even,
        (false, true) => Parity::Odd,
        (true, true) => Parity::Neither,
    }
}

/// Parses an expression into a generating function.
///
/// Expressions that match a catalog entry structurally become that entry, and
/// polynomial expressions become [`Source::Polynomial`]; both then support
/// analytic evaluation.
pub fn parse_genfun(text: &str) -> Result<GenFun, GenFunError> {
    let e = parse_expr(text)?;
    e.validate()?;
    for entry in Catalog::ALL {
        if parse_expr(entry.expression()).as_ref() == Ok(&e) {
            let mut g = GenFun::catalog(entry);
            g.text = text.trim().to_string();
            return Ok(g);
        }
    }
    if let Some(poly) = e.as_polynomial() {
        let mut g = GenFun::polynomial(poly);
        g.text = text.trim().to_string();
        return Ok(g);
    }
    let parity = e.parity_lattice().to_parity();
    let radius = e.radius();
    Ok(GenFun {
        source: Source::Expr(e),
        text: text.trim().to_string(),
        radius,
        parity,
        cache: RwLock::new(Vec::new()),
    })
}

/// `g^(k)(0) = k! c_k`.
pub fn deriv0(g: &GenFun, k: usize) -> Rational {
    let c = g.coeff(k);
    if c.is_zero() {
        return c;
    }
    Rational::factorial(k) * c
}

/// `G_λ = ∏_l g^(λ_l + n - l)(0)`; exactly zero as soon as one factor is.
pub fn g_lambda(g: &GenFun, lambda: &Partition, n: usize) -> Result<Rational, PartitionError> {
    let mut acc = Rational::one();
    for k in staircase(lambda, n)? {
        let d = deriv0(g, k);
        if d.is_zero() {
            return Ok(d);
        }
        acc *= &d;
    }
    Ok(acc)
}

pub fn radius(g: &GenFun) -> &Radius {
    g.radius()
}
