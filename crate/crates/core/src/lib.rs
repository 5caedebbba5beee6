//! Generalized Cauchy identities
//!
//! ```text
//! sum_λ G_λ/C_λ · s_λ(a) · s_λ(x) = det(g(a_j x_i)) / (V(x) V(a))
//! ```
//!
//! with `G_λ = ∏ g^(k_l)(0)`, `C_λ = ∏ k_l!` over the staircase exponents
//! `k_l = λ_l + n - l`. Truncating `g` to a Taylor polynomial makes both
//! sides finite sums over the rationals, and they agree exactly.

// Error enums carry exact rationals for diagnostics; they are never on a hot path.
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod genfun;
pub mod identity;
pub mod numerics;
pub mod partitions;
pub mod schur;
