//! Both sides of the collocation Cauchy identity
//!
//! ```text
//! sum_λ G_λ/C_λ · s_λ(a) · s_λ(x) = det(g(a_j x_i)) / (V(x) V(a))
//! ```
//!
//! In exact-truncated mode `g` is replaced by its degree-`m` Taylor
//! polynomial. The sum then runs over the finitely many partitions whose
//! staircase exponents are all at most `m`, and both sides are equal as
//! rationals. Analytic mode compares float partial sums against the
//! determinant of `g` itself.

mod audit;
mod checks;
mod report;

use rayon::prelude::*;
use thiserror::Error;

use crate::genfun::{eval_analytic, g_lambda, GenFun, GenFunError};
use crate::numerics::{det_exact, det_float, MatrixQ, NumericsError, Rational};
use crate::partitions::{c_lambda, enumerate, staircase, Partition, PartitionError};
use crate::schur::{bialternant, vandermonde, PointVector, SchurError};

pub use audit::{audit_example, claimed_coefficient, claimed_sign_exponent, AuditExample, AuditRecord};
pub use checks::{
    cauchy_product_check, single_schur_check, square_product_check, symmetry_check, vandermonde_square_check,
};
pub use report::{IdentityReport, ModeTag, Term, TracePoint, Value, Verdict};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("{which} must be pairwise distinct (entries {first} and {second} coincide)")]
    RepeatedPoints { which: &'static str, first: usize, second: usize },
    #[error("a has {a} entries but x has {x}")]
    DimensionMismatch { a: usize, x: usize },
    #[error("need at least one point")]
    NoPoints,
    #[error("x_{index} = {value} lies outside (-R/a_max, R/a_max) with R/a_max = {bound}")]
    OutsideRadius { index: usize, value: Rational, bound: String },
    #[error("analytic evaluation is not supported for g = {0}")]
    UnsupportedAnalyticEval(String),
    #[error("a_{j} * x_{i} = 1 makes 1/(1 - a_j x_i) singular")]
    SingularEntry { i: usize, j: usize },
    #[error("exponents must be strictly decreasing and nonnegative: {0:?}")]
    NotStrictlyDecreasing(Vec<usize>),
    #[error("{0:?} is not a permutation of 0..n")]
    InvalidPermutation(Vec<usize>),
    #[error("operation needs {expected} mode")]
    WrongMode { expected: &'static str },
    #[error("tolerance must be positive and finite")]
    InvalidTolerance,
    #[error("catalog entry {0} has no product form here")]
    NoProductForm(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    /// Replace `g` by its Taylor polynomial of this degree.
    ExactTruncated { order: usize },
    /// Float comparison; partial sums grow until the residual is within
    /// `tolerance` or the staircase cap reaches `k_max`.
    Analytic { tolerance: f64, k_max: usize },
}

/// Points `a` and `x` (same length `n`, each pairwise distinct) and a mode.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    a: PointVector,
    x: PointVector,
    mode: Mode,
}

fn check_distinct(which: &'static str, p: &PointVector) -> Result<(), IdentityError> {
    match p.repeated_pair() {
        Some((first, second)) => Err(IdentityError::RepeatedPoints { which, first, second }),
        None => Ok(()),
    }
}

impl EvalConfig {
    pub fn new(a: PointVector, x: PointVector, mode: Mode) -> Result<Self, IdentityError> {
        if a.len() != x.len() {
            return Err(IdentityError::DimensionMismatch { a: a.len(), x: x.len() });
        }
        if a.is_empty() {
            return Err(IdentityError::NoPoints);
        }
        check_distinct("a", &a)?;
        check_distinct("x", &x)?;
        if let Mode::Analytic { tolerance, .. } = mode {
            if !(tolerance > 0.0 && tolerance.is_finite()) {
                return Err(IdentityError::InvalidTolerance);
            }
        }
        Ok(EvalConfig { a, x, mode })
    }

    pub fn exact(a: PointVector, x: PointVector, order: usize) -> Result<Self, IdentityError> {
        EvalConfig::new(a, x, Mode::ExactTruncated { order })
    }

    pub fn analytic(a: PointVector, x: PointVector, tolerance: f64, k_max: usize) -> Result<Self, IdentityError> {
        EvalConfig::new(a, x, Mode::Analytic { tolerance, k_max })
    }

    pub fn a(&self) -> &PointVector {
        &self.a
    }

    pub fn x(&self) -> &PointVector {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    /// The same points under a different mode.
    pub fn with_mode(&self, mode: Mode) -> Result<Self, IdentityError> {
        EvalConfig::new(self.a.clone(), self.x.clone(), mode)
    }

    /// `a` and `x` exchanged.
    pub fn swapped(&self) -> Self {
        EvalConfig { a: self.x.clone(), x: self.a.clone(), mode: self.mode.clone() }
    }

    /// `max |a_i|`.
    pub fn a_max(&self) -> Rational {
        self.a.max_abs()
    }

    /// `V(x) · V(a)`, nonzero by construction.
    pub fn vandermonde_product(&self) -> Rational {
        vandermonde(&self.x) * vandermonde(&self.a)
    }
}

/// Options for exact-mode runs.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Evaluate partition terms on this many threads. The result does not
    /// depend on it.
    pub threads: Option<usize>,
    /// Attach every summand to the report.
    pub log_terms: bool,
}

/// Entry `(i, j)` is `sum_{k<=m} c_k (a_j x_i)^k`.
pub fn collocation_matrix_truncated(g: &GenFun, cfg: &EvalConfig, m: usize) -> MatrixQ {
    let taylor = g.series(m);
    let (a, x) = (cfg.a.values(), cfg.x.values());
    MatrixQ::from_fn(cfg.n(), |i, j| taylor.eval(&(&a[j] * &x[i]))).expect("n >= 1")
}

/// `det(collocation_matrix_truncated) / (V(x) V(a))`.
pub fn rhs_truncated(g: &GenFun, cfg: &EvalConfig, m: usize) -> Result<Rational, IdentityError> {
    let det = det_exact(&collocation_matrix_truncated(g, cfg, m));
    Ok(det.checked_div(&cfg.vandermonde_product())?)
}

/// One summand with all of its factors.
pub fn term(g: &GenFun, cfg: &EvalConfig, lambda: &Partition) -> Result<Term, IdentityError> {
    let n = cfg.n();
    let g_l = g_lambda(g, lambda, n)?;
    let c_l = c_lambda(lambda, n)?;
    let s_a = bialternant(lambda, &cfg.a)?;
    let s_x = bialternant(lambda, &cfg.x)?;
    let value = &g_l / &c_l * &s_a * &s_x;
    Ok(Term { lambda: lambda.clone(), staircase: staircase(lambda, n)?, g: g_l, c: c_l, s_a, s_x, term: value })
}

/// The summand value alone; skips the Schur evaluations when `G_λ = 0`.
fn term_value(g: &GenFun, cfg: &EvalConfig, lambda: &Partition) -> Result<Rational, IdentityError> {
    let n = cfg.n();
    let g_l = g_lambda(g, lambda, n)?;
    if g_l.is_zero() {
        return Ok(g_l);
    }
    let c_l = c_lambda(lambda, n)?;
    Ok(g_l / c_l * bialternant(lambda, &cfg.a)? * bialternant(lambda, &cfg.x)?)
}

/// Every summand with staircase exponents at most `k_cap`, in canonical
/// partition order.
pub fn lhs_terms(g: &GenFun, cfg: &EvalConfig, k_cap: usize) -> Result<Vec<Term>, IdentityError> {
    enumerate(cfg.n(), k_cap).map(|lambda| term(g, cfg, &lambda)).collect()
}

/// `sum G_λ/C_λ s_λ(a) s_λ(x)` over partitions with every staircase exponent
/// at most `k_cap`. Zero when `k_cap < n - 1`.
pub fn lhs_partial(g: &GenFun, cfg: &EvalConfig, k_cap: usize) -> Result<Rational, IdentityError> {
    let mut acc = Rational::zero();
    for lambda in enumerate(cfg.n(), k_cap) {
        acc += &term_value(g, cfg, &lambda)?;
    }
    Ok(acc)
}

/// [`lhs_partial`] with the partition terms spread over a thread pool.
pub fn lhs_partial_parallel(
    g: &GenFun,
    cfg: &EvalConfig,
    k_cap: usize,
    threads: usize,
) -> Result<Rational, IdentityError> {
    let lambdas: Vec<Partition> = enumerate(cfg.n(), k_cap).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
    let values: Vec<Result<Rational, IdentityError>> =
        pool.install(|| lambdas.par_iter().map(|l| term_value(g, cfg, l)).collect());
    values.into_iter().sum::<Result<Rational, IdentityError>>()
}

/// Exact check of the degree-`m` truncation: `lhs_partial(m)` against
/// `rhs_truncated(m)`.
pub fn verify_truncated(g: &GenFun, cfg: &EvalConfig, m: usize) -> Result<IdentityReport, IdentityError> {
    verify_truncated_with(g, cfg, m, &VerifyOptions::default())
}

pub fn verify_truncated_with(
    g: &GenFun,
    cfg: &EvalConfig,
    m: usize,
    opts: &VerifyOptions,
) -> Result<IdentityReport, IdentityError> {
    let count = enumerate(cfg.n(), m).count();
    let (lhs, terms) = if opts.log_terms {
        let terms = lhs_terms(g, cfg, m)?;
        let sum: Rational = terms.iter().map(|t| &t.term).sum();
        (sum, Some(terms))
    } else {
        let sum = match opts.threads {
            Some(t) if t > 1 => lhs_partial_parallel(g, cfg, m, t)?,
            _ => lhs_partial(g, cfg, m)?,
        };
        (sum, None)
    };
    let rhs = rhs_truncated(g, cfg, m)?;
    let mut report = IdentityReport::exact(m, count, lhs, rhs);
    report.terms = terms;
    Ok(report)
}

/// Rejects configurations outside `(-R/a_max, R/a_max)` and functions
/// without a usable radius.
fn check_radius(g: &GenFun, cfg: &EvalConfig) -> Result<(), IdentityError> {
    let radius = g.radius();
    if !radius.is_known() {
        return Err(IdentityError::UnsupportedAnalyticEval(g.text().to_string()));
    }
    let a_max = cfg.a_max();
    if a_max.is_zero() {
        return Ok(());
    }
    let bound = radius.value().div(&a_max);
    for (index, x) in cfg.x.values().iter().enumerate() {
        if !bound.exceeds(&x.abs()) {
            return Err(IdentityError::OutsideRadius { index, value: x.clone(), bound: bound.to_string() });
        }
    }
    Ok(())
}

/// Entry tolerance used for the analytic collocation matrix.
fn entry_eps() -> Rational {
    Rational::new(1, num_bigint::BigInt::from(10).pow(30)).expect("nonzero")
}

/// `det(g(a_j x_i)) / (V(x) V(a))` in floating point, entries accurate to
/// 1e-30 before rounding.
pub fn analytic_rhs(g: &GenFun, cfg: &EvalConfig) -> Result<f64, IdentityError> {
    check_radius(g, cfg)?;
    let eps = entry_eps();
    let (a, x) = (cfg.a.values(), cfg.x.values());
    let n = cfg.n();
    let mut rows = vec![vec![0.0; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let z = &a[j] * &x[i];
            *cell = eval_analytic(g, &z, &eps)
                .map_err(|e| match e {
                    GenFunError::UnsupportedAnalyticEval(s) => IdentityError::UnsupportedAnalyticEval(s),
                    other => IdentityError::GenFun(other),
                })?
                .to_f64();
        }
    }
    Ok(det_float(&rows) / cfg.vandermonde_product().to_f64())
}

/// Float partial sums against [`analytic_rhs`], growing the staircase cap
/// from `n - 1` until the residual is within tolerance or `k_max` is reached.
///
/// Summation runs shell by shell (all partitions with largest exponent
/// exactly `k_cap`), each shell in canonical order.
pub fn verify_analytic(g: &GenFun, cfg: &EvalConfig) -> Result<IdentityReport, IdentityError> {
    let Mode::Analytic { tolerance, k_max } = *cfg.mode() else {
        return Err(IdentityError::WrongMode { expected: "analytic" });
    };
    let rhs = analytic_rhs(g, cfg)?;
    let n = cfg.n();
    let mut lhs = 0.0f64;
    let mut count = 0usize;
    let mut trace = Vec::new();
    let mut verdict = Verdict::Fail;
    let mut last_cap = k_max;
    for k_cap in (n - 1)..=k_max.max(n - 1) {
        let top = k_cap + 1 - n;
        for lambda in enumerate(n, k_cap).filter(|l| l.part(1) == top) {
            lhs += term_value(g, cfg, &lambda)?.to_f64();
            count += 1;
        }
        let residual = (lhs - rhs).abs();
        trace.push(TracePoint { k_cap, lhs, residual });
        if residual <= tolerance {
            verdict = Verdict::WithinTolerance;
            last_cap = k_cap;
            break;
        }
    }
    Ok(IdentityReport {
        mode: ModeTag::Analytic,
        order: last_cap,
        partition_count: count,
        lhs: Value::Float(lhs),
        rhs: Value::Float(rhs),
        residual: Value::Float((lhs - rhs).abs()),
        verdict,
        terms: None,
        trace: Some(trace),
    })
}

/// Dispatches on the configured mode.
pub fn verify(g: &GenFun, cfg: &EvalConfig, opts: &VerifyOptions) -> Result<IdentityReport, IdentityError> {
    match cfg.mode() {
        Mode::ExactTruncated { order } => verify_truncated_with(g, cfg, *order, opts),
        Mode::Analytic { .. } => verify_analytic(g, cfg),
    }
}

#[cfg(test)]
mod tests;
