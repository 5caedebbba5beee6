// Closed forms printed for `G_λ` checked against derivatives at 0.
//
// The engine always uses the derivative values, so the identity holds even
// where a printed form disagrees.

use std::error::Error;

use cauchy_core::cli::audit_records;
use cauchy_core::genfun::GenFun;
use cauchy_core::identity::{verify_truncated, AuditExample, EvalConfig};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: PointVector = "1/2,1/3,-1/5".parse()?;
    let x: PointVector = "1/7,2/3,1/4".parse()?;
    for example in AuditExample::ALL {
        for n in 1..=3 {
            let records = audit_records(example, n, 6)?;
            let bad: Vec<_> = records.iter().filter(|r| !r.matches).collect();
            print!("{:<10} n = {n}: {:>3} records, {:>3} mismatches", example.id(), records.len(), bad.len());
            if let Some(r) = bad.first() {
                print!("  first: λ = {} claimed {} computed {}", r.lambda, r.claimed, r.computed);
            }
            println!();
        }
        let g = GenFun::catalog(example.catalog());
        let cfg = EvalConfig::exact(a.clone(), x.clone(), 9)?;
        assert!(verify_truncated(&g, &cfg, 9)?.passed());
    }
    Ok(())
}

fn main() {
    run().expect("coefficient audit example");
}
