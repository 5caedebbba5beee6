// exp, sinh and sin: every Taylor truncation satisfies the identity
// exactly, and the float partial sums converge to `det(g(a_j x_i))/(V V)`.

use std::error::Error;

use cauchy_core::genfun::{Catalog, GenFun};
use cauchy_core::identity::{verify_analytic, verify_truncated, EvalConfig};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: PointVector = "1,2".parse()?;
    let x: PointVector = "1/2,1/3".parse()?;
    for entry in [Catalog::Exp, Catalog::Sinh, Catalog::Sin] {
        let g = GenFun::catalog(entry);
        for m in [4, 8, 12] {
            let cfg = EvalConfig::exact(a.clone(), x.clone(), m)?;
            assert!(verify_truncated(&g, &cfg, m)?.passed());
        }
        let cfg = EvalConfig::analytic(a.clone(), x.clone(), 1e-10, 40)?;
        let r = verify_analytic(&g, &cfg)?;
        println!("{:<8} rhs = {:.15}  {} at k_cap = {}", entry.expression(), r.rhs.to_f64(), r.verdict, r.order);
        for p in r.trace.as_deref().unwrap_or_default().iter().step_by(3) {
            println!("    k_cap {:>2}  residual {:.3e}", p.k_cap, p.residual);
        }
        assert!(r.passed());
    }
    Ok(())
}

fn main() {
    run().expect("transcendental example");
}
