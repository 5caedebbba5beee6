// Polynomial `g` make the identity finite. A sum of `n` monomials
// `x^μ_1 + ... + x^μ_n` leaves a single Schur product.

use std::error::Error;

use cauchy_core::genfun::parse_genfun;
use cauchy_core::identity::{single_schur_check, verify_truncated_with, EvalConfig, VerifyOptions};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: PointVector = "1,2".parse()?;
    let x: PointVector = "3,5".parse()?;

    // 1 + x + x^2: finite truncation of the Cauchy identity.
    let g = parse_genfun("1+x+x^2")?;
    let cfg = EvalConfig::exact(a.clone(), x.clone(), 2)?;
    let r = verify_truncated_with(&g, &cfg, 2, &VerifyOptions { threads: None, log_terms: true })?;
    for t in r.terms.as_deref().unwrap_or_default() {
        println!("λ = {:<6} G/C = {}/{}  s_λ(a) s_λ(x) = {} * {}", t.lambda.to_string(), t.g, t.c, t.s_a, t.s_x);
    }
    println!("{}: lhs = rhs = {} ({})", g, r.lhs, r.verdict);
    assert!(r.passed());

    // 2 - x/3 + 5x^3: only partitions with λ_1 <= m - n + 1 survive.
    let g = parse_genfun("2 - x/3 + 5*x^3")?;
    let cfg = EvalConfig::exact(a.clone(), x.clone(), 3)?;
    let r = verify_truncated_with(&g, &cfg, 3, &VerifyOptions::default())?;
    println!("{}: lhs = rhs = {} ({})", g, r.lhs, r.verdict);
    assert!(r.passed());

    for mu in [vec![3usize, 0], vec![4, 1], vec![6, 2]] {
        let r = single_schur_check(&mu, &cfg)?;
        println!("μ = {mu:?}: s_λ(a) s_λ(x) = {} ({})", r.lhs, r.verdict);
        assert!(r.passed());
    }
    Ok(())
}

fn main() {
    run().expect("polynomial truncation example");
}
