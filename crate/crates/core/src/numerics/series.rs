//! Truncated Maclaurin series with exact rational coefficients.

use std::fmt;

use super::{NumericsError, Rational};

/// Coefficients `c_0..=c_K` of a power series, valid up to `x^K`.
///
/// `c_k = g^(k)(0) / k!`. There is always at least one coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesTrunc {
    coeffs: Vec<Rational>,
}

impl SeriesTrunc {
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        SeriesTrunc { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        SeriesTrunc::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        SeriesTrunc { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = SeriesTrunc::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        SeriesTrunc::constant(Rational::one(), order)
    }

    /// `x^k` truncated at `order` (all zeros when `k > order`).
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = SeriesTrunc::zero(order);
        if k <= order {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rational::zero());
        SeriesTrunc { coeffs }
    }

    pub fn add(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        SeriesTrunc { coeffs }
    }

    pub fn sub(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        SeriesTrunc { coeffs }
    }

    pub fn neg(&self) -> SeriesTrunc {
        SeriesTrunc { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, factor: &Rational) -> SeriesTrunc {
        SeriesTrunc { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        SeriesTrunc { coeffs }
    }

    /// `h` with `self * h = 1` up to `self.order()`.
    pub fn reciprocal(&self) -> Result<SeriesTrunc, NumericsError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(NumericsError::ZeroConstantTerm);
        }
        let inv0 = c0.recip()?;
        let order = self.order();
        let mut h: Vec<Rational> = Vec::with_capacity(order + 1);
        h.push(inv0.clone());
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let c = &self.coeffs[j];
                if !c.is_zero() {
                    acc += &(c * &h[k - j]);
                }
            }
            h.push(-(acc * &inv0));
        }
        Ok(SeriesTrunc { coeffs: h })
    }

    pub fn pow(&self, exp: usize) -> SeriesTrunc {
        let mut acc = SeriesTrunc::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `sum_k outer[k] * self^k`, for `self` with zero constant term.
    ///
    /// `outer` must hold at least `self.order() + 1` coefficients; higher
    /// powers of `self` vanish at this order.
    pub fn compose_into(&self, outer: &[Rational]) -> Result<SeriesTrunc, NumericsError> {
        if !self.coeffs[0].is_zero() {
            return Err(NumericsError::NonzeroInnerConstant);
        }
        let order = self.order();
        debug_assert!(outer.len() > order);
        // Horner from the top coefficient down.
        let mut acc = SeriesTrunc::constant(outer[order].clone(), order);
        for c in outer[..order].iter().rev() {
            acc = acc.mul(self);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Exact value of the truncated polynomial at `z`.
    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Index of the last nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn series_add(f: &SeriesTrunc, g: &SeriesTrunc) -> SeriesTrunc {
    f.add(g)
}

pub fn series_mul(f: &SeriesTrunc, g: &SeriesTrunc) -> SeriesTrunc {
    f.mul(g)
}

pub fn series_reciprocal(f: &SeriesTrunc) -> Result<SeriesTrunc, NumericsError> {
    f.reciprocal()
}
