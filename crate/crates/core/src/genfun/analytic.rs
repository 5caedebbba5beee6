//! Rational approximations of `g(z)` with proven error bounds.

use crate::numerics::Rational;

use super::{Catalog, GenFun, GenFunError, Source};

/// A rational `q` with `|q - g(z)| <= eps`.
///
/// Polynomials and the rational catalog entries are evaluated exactly.
/// exp, sinh and sin use Taylor partial sums with the factorial tail bound
/// `|z|^(K+1)/(K+1)! * 1/(1 - |z|/(K+2))`; ln(1-x) uses the geometric bound
/// `|z|^(K+1)/(1-|z|)`.
pub fn eval_analytic(g: &GenFun, z: &Rational, eps: &Rational) -> Result<Rational, GenFunError> {
    if eps.is_zero() || eps.is_negative() {
        return Err(GenFunError::NonPositiveTolerance);
    }
    let radius = g.radius();
    if !radius.is_known() {
        return Err(GenFunError::UnsupportedAnalyticEval(g.text().to_string()));
    }
    if !radius.value().exceeds(&z.abs()) {
        return Err(GenFunError::OutsideRadius { z: z.clone(), radius: radius.value().clone() });
    }
    match g.source() {
        Source::Polynomial(b) => Ok(horner(b, z)),
        Source::Catalog(c) => {
            if let Some(v) = c.closed_form(z) {
                return Ok(v);
            }
            Ok(match c {
                Catalog::Log => log_one_minus(z, eps),
                _ => entire_taylor(*c, z, eps),
            })
        }
        Source::Expr(_) => Err(GenFunError::UnsupportedAnalyticEval(g.text().to_string())),
    }
}

fn horner(b: &[Rational], z: &Rational) -> Rational {
    b.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
}

/// Partial sums of a series with `|c_k| <= 1/k!`.
fn entire_taylor(entry: Catalog, z: &Rational, eps: &Rational) -> Rational {
    let abs_z = z.abs();
    let two = Rational::from(2);
    let mut sum = Rational::zero();
    let mut power = Rational::one(); // z^k
    let mut bound_term = Rational::one(); // |z|^k / k!
    let mut k = 0usize;
    loop {
        let c = entry.coeff(k);
        if !c.is_zero() {
            sum += &(&c * &power);
        }
        power *= z;
        bound_term = bound_term * &abs_z / Rational::from(k as i64 + 1);
        // bound_term is now |z|^(K+1)/(K+1)! for K = k. Once K + 2 >= 2|z|
        // the geometric factor is at most 2.
        let ratio_ok = &two * &abs_z <= (k as i64 + 2);
        if ratio_ok && &two * &bound_term <= *eps {
            return sum;
        }
        k += 1;
    }
}

/// `ln(1 - z) = -sum_{k>=1} z^k / k` for `|z| < 1`.
fn log_one_minus(z: &Rational, eps: &Rational) -> Rational {
    let abs_z = z.abs();
    let tail_den = Rational::one() - &abs_z;
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    let mut abs_power = Rational::one();
    let mut k = 1i64;
    loop {
        power *= z;
        abs_power *= &abs_z;
        sum -= &(&power / Rational::from(k));
        // tail after K = k terms: |z|^(K+1) / (1 - |z|)
        if &(&abs_power * &abs_z) / &tail_den <= *eps {
            return sum;
        }
        k += 1;
    }
}
