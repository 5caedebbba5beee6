//! Integer partitions, staircase exponents and the coefficient products
//! attached to them.
//!
//! A partition `λ` with at most `n` parts corresponds to the strictly
//! decreasing exponent vector `k_l = λ_l + n - l`. Every coefficient in the
//! Schur expansion of a collocation determinant is read off at those
//! exponents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::numerics::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has {length} parts but n = {n}")]
    LengthExceedsN { length: usize, n: usize },
    #[error("staircase exponent {index} exceeds the highest available coefficient index {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("number of variables must be positive")]
    ZeroVariables,
    #[error("cannot parse partition {0:?} (expected e.g. \"[3,1]\" or \"[]\")")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers; trailing zeros are
/// stripped on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Inverse of [`staircase`]: `λ_l = k_l - n + l`.
    pub fn from_staircase(exponents: &[usize]) -> Result<Self, PartitionError> {
        let n = exponents.len();
        let mut parts = Vec::with_capacity(n);
        for (idx, &k) in exponents.iter().enumerate() {
            let shift = n - 1 - idx;
            if k < shift {
                return Err(PartitionError::NotWeaklyDecreasing(exponents.to_vec()));
            }
            parts.push(k - shift);
        }
        Partition::new(parts)
    }

    /// Positive parts only.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` (1-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// l(λ), the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts =
            inner.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParityClass::Even => "Even",
            ParityClass::Odd => "Odd",
            ParityClass::Mixed => "Mixed",
        };
        f.write_str(s)
    }
}

fn check_len(lambda: &Partition, n: usize) -> Result<(), PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroVariables);
    }
    if lambda.len() > n {
        return Err(PartitionError::LengthExceedsN { length: lambda.len(), n });
    }
    Ok(())
}

/// `k_l = λ_l + n - l` for `l = 1..=n`; strictly decreasing.
pub fn staircase(lambda: &Partition, n: usize) -> Result<Vec<usize>, PartitionError> {
    check_len(lambda, n)?;
    Ok((1..=n).map(|l| lambda.part(l) + n - l).collect())
}

/// All partitions with at most `n` parts and every staircase exponent at
/// most `k_cap`, i.e. `λ_1 <= k_cap - n + 1`.
///
/// Ordered by ascending weight, then descending lexicographic order within a
/// weight. Empty when `k_cap < n - 1`. Panics if `n == 0`.
pub fn enumerate(n: usize, k_cap: usize) -> impl Iterator<Item = Partition> {
    assert!(n > 0, "enumerate needs at least one variable");
    let max_part = (k_cap + 1).checked_sub(n);
    let cap = max_part.unwrap_or(0);
    max_part.map(|p| 0..=p * n).into_iter().flatten().flat_map(move |w| partitions_of(w, n, cap))
}

/// All partitions with at most `n` parts and weight at most `max_weight`, in
/// the same canonical order as [`enumerate`].
pub fn enumerate_by_weight(n: usize, max_weight: usize) -> impl Iterator<Item = Partition> {
    assert!(n > 0, "enumerate_by_weight needs at least one variable");
    (0..=max_weight).flat_map(move |w| partitions_of(w, n, w))
}

/// Partitions of `weight` into at most `max_len` parts each at most
/// `max_part`, descending lexicographic.
pub fn partitions_of(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(remaining: usize, slots: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 || cap * slots < remaining {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, slots - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// `C_λ = ∏ k_l!` over the staircase exponents.
pub fn c_lambda(lambda: &Partition, n: usize) -> Result<Rational, PartitionError> {
    Ok(staircase(lambda, n)?.into_iter().map(Rational::factorial).product())
}

/// Product of the positive parts; 1 for the empty partition.
pub fn p_lambda(lambda: &Partition) -> Rational {
    lambda.parts.iter().map(|&p| Rational::from(p as i64)).product()
}

/// `B_λ = ∏ b_{k_l}` for polynomial coefficients `b_0..=b_m`.
pub fn b_lambda(b: &[Rational], lambda: &Partition, n: usize) -> Result<Rational, PartitionError> {
    let ks = staircase(lambda, n)?;
    let max = b.len().saturating_sub(1);
    let mut acc = Rational::one();
    for k in ks {
        let coeff = b.get(k).ok_or(PartitionError::IndexOutOfRange { index: k, max })?;
        acc *= coeff;
    }
    Ok(acc)
}

pub fn parity_class(lambda: &Partition, n: usize) -> Result<ParityClass, PartitionError> {
    let ks = staircase(lambda, n)?;
    Ok(if ks.iter().all(|k| k % 2 == 0) {
        ParityClass::Even
    } else if ks.iter().all(|k| k % 2 == 1) {
        ParityClass::Odd
    } else {
        ParityClass::Mixed
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Every weakly decreasing tuple of length `n` with entries up to `max`,
    /// by brute force over the full cube.
    fn brute_force_partitions(n: usize, max: usize) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let total = (max + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut parts = Vec::with_capacity(n);
            for _ in 0..n {
                parts.push(c % (max + 1));
                c /= max + 1;
            }
            if let Ok(lambda) = Partition::new(parts) {
                out.insert(lambda);
            }
        }
        out
    }

    #[test]
    fn construction_and_text_form() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(p(&[3, 1, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2 , 2 ,1 ] ".parse::<Partition>().unwrap(), p(&[2, 2, 1]));
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[1,3]".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 1, 1]).to_string(), "[4,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(&p(&[3, 1]), 2).unwrap(), vec![4, 1]);
        assert_eq!(staircase(&Partition::empty(), 3).unwrap(), vec![2, 1, 0]);
        assert_eq!(staircase(&p(&[2, 2, 1]), 3).unwrap(), vec![4, 3, 1]);
        assert_eq!(staircase(&p(&[1, 1, 1]), 2), Err(PartitionError::LengthExceedsN { length: 3, n: 2 }));
    }

    #[test]
    fn staircase_round_trip() {
        for n in 1..=4 {
            for lambda in enumerate(n, 8) {
                let ks = staircase(&lambda, n).unwrap();
                assert!(ks.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(Partition::from_staircase(&ks).unwrap(), lambda);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let got: Vec<Partition> = enumerate(1, 3).collect();
        assert_eq!(got, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3])]);
        let got: Vec<Partition> = enumerate(2, 1).collect();
        assert_eq!(got, vec![Partition::empty()]);
        assert_eq!(enumerate(3, 1).count(), 0);
    }

    #[test]
    fn enumerate_n2_kcap2_matches_brute_force() {
        // Brute force over all partitions of weight <= 2 * k_cap, filtered by
        // the staircase cap.
        let n = 2;
        let k_cap = 2;
        let want: Vec<Partition> = brute_force_partitions(n, 2 * k_cap)
            .into_iter()
            .filter(|l| staircase(l, n).unwrap().iter().all(|&k| k <= k_cap))
            .collect();
        let got: BTreeSet<Partition> = enumerate(n, k_cap).collect();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), want);
        assert_eq!(enumerate(n, k_cap).collect::<Vec<_>>(), vec![Partition::empty(), p(&[1]), p(&[1, 1])]);
    }

    #[test]
    fn enumerate_is_exactly_the_strictly_decreasing_tuples() {
        for n in 1..=4 {
            for k_cap in 0..=9 {
                let from_enum: BTreeSet<Vec<usize>> = enumerate(n, k_cap).map(|l| staircase(&l, n).unwrap()).collect();
                // Direct generation: n-subsets of {0..=k_cap} written decreasingly.
                let mut direct = BTreeSet::new();
                for mask in 0u32..(1 << (k_cap + 1)) {
                    if mask.count_ones() as usize == n {
                        let mut v: Vec<usize> = (0..=k_cap).filter(|b| mask & (1 << b) != 0).collect();
                        v.reverse();
                        direct.insert(v);
                    }
                }
                assert_eq!(from_enum, direct, "n={n} k_cap={k_cap}");
            }
        }
    }

    #[test]
    fn enumerate_count_is_binomial() {
        for n in 1..=4 {
            for k_cap in 0..=12 {
                assert_eq!(enumerate(n, k_cap).count(), binomial(k_cap + 1, n), "n={n} k_cap={k_cap}");
            }
        }
    }

    #[test]
    fn enumerate_order_is_canonical() {
        let all: Vec<Partition> = enumerate(3, 7).collect();
        for w in all.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            assert!(a.weight() < b.weight() || (a.weight() == b.weight() && a.parts() > b.parts()));
        }
    }

    #[test]
    fn enumerate_by_weight_matches_brute_force() {
        for n in 1..=3 {
            let got: BTreeSet<Partition> = enumerate_by_weight(n, 6).collect();
            let want: BTreeSet<Partition> =
                brute_force_partitions(n, 6).into_iter().filter(|l| l.weight() <= 6).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn coefficient_products() {
        assert_eq!(c_lambda(&p(&[5]), 1).unwrap(), Rational::factorial(5));
        assert_eq!(c_lambda(&Partition::empty(), 3).unwrap(), rat(2, 1));
        assert_eq!(c_lambda(&p(&[2, 1]), 2).unwrap(), rat(6, 1));
        assert_eq!(p_lambda(&p(&[3, 2])), rat(6, 1));
        assert_eq!(p_lambda(&Partition::empty()), rat(1, 1));
        assert_eq!(p_lambda(&p(&[4, 1, 1])), rat(4, 1));
    }

    #[test]
    fn b_lambda_examples() {
        let ones = vec![Rational::one(); 6];
        for lambda in enumerate(2, 5) {
            assert_eq!(b_lambda(&ones, &lambda, 2).unwrap(), Rational::one());
        }
        let b = vec![rat(7, 1), rat(5, 1), rat(3, 1)];
        assert_eq!(b_lambda(&b, &p(&[2]), 1).unwrap(), rat(3, 1));
        let b = vec![rat(1, 1), rat(0, 1), rat(3, 1)];
        assert_eq!(b_lambda(&b, &p(&[1, 1]), 2).unwrap(), Rational::zero());
        assert_eq!(b_lambda(&b, &p(&[3]), 1), Err(PartitionError::IndexOutOfRange { index: 3, max: 2 }));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_class(&p(&[1]), 2).unwrap(), ParityClass::Even);
        assert_eq!(parity_class(&p(&[1, 1]), 2).unwrap(), ParityClass::Mixed);
        assert_eq!(parity_class(&p(&[3]), 1).unwrap(), ParityClass::Odd);
    }

    #[test]
    fn parity_consistent_with_definition() {
        for n in 1..=4 {
            for lambda in enumerate_by_weight(n, 10) {
                let ks: Vec<usize> = (1..=n).map(|l| lambda.part(l) + n - l).collect();
                let class = parity_class(&lambda, n).unwrap();
                let all_even = ks.iter().all(|k| k % 2 == 0);
                let all_odd = ks.iter().all(|k| k % 2 == 1);
                assert_eq!(class == ParityClass::Even, all_even);
                assert_eq!(class == ParityClass::Odd, all_odd);
                if class != ParityClass::Mixed && n >= 2 {
                    // Same parity throughout forces every gap to be even.
                    assert!(ks.windows(2).all(|w| (w[0] - w[1]) % 2 == 0));
                }
            }
        }
    }
}
