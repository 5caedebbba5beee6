// `g = 1/(1-x)` recovers the classic Cauchy identity
// `sum_λ s_λ(a) s_λ(x) = ∏ 1/(1 - a_j x_i)`.
//
// Every truncation order is checked exactly, then the full product is
// compared with the float partial sums.

use std::error::Error;

use cauchy_core::genfun::{Catalog, GenFun};
use cauchy_core::identity::{cauchy_product_check, verify, verify_truncated, EvalConfig, VerifyOptions};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: PointVector = "1/2,1/3,-1/4".parse()?;
    let x: PointVector = "1/5,1/7,2/3".parse()?;
    let g = GenFun::catalog(Catalog::Geometric);

    for m in 2..=8 {
        let cfg = EvalConfig::exact(a.clone(), x.clone(), m)?;
        let r = verify_truncated(&g, &cfg, m)?;
        println!("m = {m:>2}  {:>4} partitions  lhs = rhs = {}", r.partition_count, r.lhs);
        assert!(r.passed());
    }

    let (det_side, product) = cauchy_product_check(&a, &x)?;
    assert_eq!(det_side, product);
    println!("det(1/(1-a_j x_i)) / (V(x)V(a)) = ∏ 1/(1-a_j x_i) = {product}");

    let cfg = EvalConfig::analytic(a, x, 1e-12, 60)?;
    let r = verify(&g, &cfg, &VerifyOptions::default())?;
    println!("analytic: {} after k_cap = {}, residual {}", r.verdict, r.order, r.residual);
    assert!(r.passed());
    assert!((r.rhs.to_f64() - product.to_f64()).abs() < 1e-12);
    Ok(())
}

fn main() {
    run().expect("cauchy identity example");
}
