//! Closed-form special cases and consistency checks of the identity.

use crate::genfun::{Catalog, GenFun};
use crate::numerics::{det_exact, MatrixQ, Rational};
use crate::partitions::Partition;
use crate::schur::{bialternant, vandermonde, PointVector};

use super::{
    check_distinct, collocation_matrix_truncated, lhs_partial, rhs_truncated, EvalConfig, IdentityError, IdentityReport,
};

fn pairwise_sum_product(p: &PointVector) -> Rational {
    let v = p.values();
    let mut acc = Rational::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= &(&v[i] + &v[j]);
        }
    }
    acc
}

fn check_pair(a: &PointVector, x: &PointVector) -> Result<(), IdentityError> {
    if a.len() != x.len() {
        return Err(IdentityError::DimensionMismatch { a: a.len(), x: x.len() });
    }
    if a.is_empty() {
        return Err(IdentityError::NoPoints);
    }
    check_distinct("a", a)?;
    check_distinct("x", x)
}

/// `det(1/(1 - a_j x_i)) / (V(x) V(a))` and `∏_{i,j} 1/(1 - a_j x_i)`.
///
/// The classic Cauchy determinant makes the two equal.
pub fn cauchy_product_check(a: &PointVector, x: &PointVector) -> Result<(Rational, Rational), IdentityError> {
    check_pair(a, x)?;
    let (av, xv) = (a.values(), x.values());
    let n = av.len();
    let mut entries = Vec::with_capacity(n);
    for (i, xi) in xv.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, aj) in av.iter().enumerate() {
            let den = Rational::one() - aj * xi;
            row.push(den.recip().map_err(|_| IdentityError::SingularEntry { i, j })?);
        }
        entries.push(row);
    }
    let product: Rational = entries.iter().flatten().product();
    let det = det_exact(&MatrixQ::from_rows(entries)?);
    let ratio = det.checked_div(&(vandermonde(x) * vandermonde(a)))?;
    Ok((ratio, product))
}

/// `(V(x_1^2, ..., x_n^2), V(x) · ∏_{i<j}(x_i + x_j))`.
///
/// Points with `x_i = -x_j` are accepted and give `(0, 0)`.
pub fn vandermonde_square_check(x: &PointVector) -> Result<(Rational, Rational), IdentityError> {
    if x.is_empty() {
        return Err(IdentityError::NoPoints);
    }
    check_distinct("x", x)?;
    let squares = x.map(|v| v * v);
    Ok((vandermonde(&squares), vandermonde(x) * pairwise_sum_product(x)))
}

/// Determinant side and printed product side of the squared Cauchy
/// identities, for `1/(1-x^2)` and `1/(1+x^2)`:
///
/// ```text
/// det(1/(1 ∓ a_j^2 x_i^2)) / (V(x) V(a))
/// ∏_{i<j}(a_i+a_j)(x_i+x_j) / ∏_{i,j}(1 ∓ a_i^2 x_j^2)
/// ```
///
/// For `1/(1-x^2)` the two agree. For `1/(1+x^2)` the determinant side
/// carries an extra `(-1)^(n(n-1)/2)` under the `V = ∏_{i<j}(x_i - x_j)`
/// convention; the pair is returned as computed.
pub fn square_product_check(
    entry: Catalog,
    a: &PointVector,
    x: &PointVector,
) -> Result<(Rational, Rational), IdentityError> {
    check_pair(a, x)?;
    let plus = match entry {
        Catalog::GeomSq => false,
        Catalog::GeomSqNeg => true,
        other => return Err(IdentityError::NoProductForm(other.id().to_string())),
    };
    let (av, xv) = (a.values(), x.values());
    let n = av.len();
    let denominator = |aj: &Rational, xi: &Rational| {
        let sq = aj * aj * xi * xi;
        if plus {
            Rational::one() + sq
        } else {
            Rational::one() - sq
        }
    };
    let mut rows = Vec::with_capacity(n);
    let mut product = pairwise_sum_product(a) * pairwise_sum_product(x);
    for (i, xi) in xv.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, aj) in av.iter().enumerate() {
            let entry = denominator(aj, xi).recip().map_err(|_| IdentityError::SingularEntry { i, j })?;
            product *= &entry;
            row.push(entry);
        }
        rows.push(row);
    }
    let det = det_exact(&MatrixQ::from_rows(rows)?);
    let ratio = det.checked_div(&(vandermonde(x) * vandermonde(a)))?;
    Ok((ratio, product))
}

/// For `g = x^{μ_1} + ... + x^{μ_n}`, compares `s_λ(a) s_λ(x)` with
/// `λ_l = μ_l - n + l` against the truncated determinant ratio at order `μ_1`.
pub fn single_schur_check(mu: &[usize], cfg: &EvalConfig) -> Result<IdentityReport, IdentityError> {
    let n = cfg.n();
    if mu.len() != n || mu.windows(2).any(|w| w[0] <= w[1]) {
        return Err(IdentityError::NotStrictlyDecreasing(mu.to_vec()));
    }
    let lambda = Partition::from_staircase(mu)?;
    let top = mu[0];
    let mut coeffs = vec![Rational::zero(); top + 1];
    for &e in mu {
        coeffs[e] = Rational::one();
    }
    let g = GenFun::polynomial(coeffs);
    let lhs = bialternant(&lambda, cfg.a())? * bialternant(&lambda, cfg.x())?;
    let rhs = rhs_truncated(&g, cfg, top)?;
    Ok(IdentityReport::exact(top, 1, lhs, rhs))
}

fn validate_permutation(perm: &[usize], n: usize) -> Result<(), IdentityError> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(IdentityError::InvalidPermutation(perm.to_vec()));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(IdentityError::InvalidPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// True iff both sides of the order-`m` truncated identity are unchanged
/// under every supplied permutation of `a`, of `x`, and under `a ↔ x`.
///
/// The swapped right-hand side is taken from the transposed collocation
/// matrix; the check also confirms that the swapped build is that transpose.
pub fn symmetry_check(
    g: &GenFun,
    cfg: &EvalConfig,
    m: usize,
    permutations: &[Vec<usize>],
) -> Result<bool, IdentityError> {
    let n = cfg.n();
    for p in permutations {
        validate_permutation(p, n)?;
    }
    let lhs = lhs_partial(g, cfg, m)?;
    let rhs = rhs_truncated(g, cfg, m)?;
    let same = |c: &EvalConfig| -> Result<bool, IdentityError> {
        Ok(lhs_partial(g, c, m)? == lhs && rhs_truncated(g, c, m)? == rhs)
    };
    for p in permutations {
        let pa = EvalConfig::new(cfg.a().permuted(p), cfg.x().clone(), cfg.mode().clone())?;
        let px = EvalConfig::new(cfg.a().clone(), cfg.x().permuted(p), cfg.mode().clone())?;
        if !same(&pa)? || !same(&px)? {
            return Ok(false);
        }
    }
    let swapped = cfg.swapped();
    let transposed = collocation_matrix_truncated(g, cfg, m).transpose();
    if collocation_matrix_truncated(g, &swapped, m) != transposed {
        return Ok(false);
    }
    let swapped_rhs = det_exact(&transposed).checked_div(&swapped.vandermonde_product())?;
    Ok(lhs_partial(g, &swapped, m)? == lhs && swapped_rhs == rhs)
}
