// With one point and `a = (1)` the identity collapses to the Maclaurin
// expansion of `g`: the partition sum is the Taylor partial sum at `x`.

use std::error::Error;

use cauchy_core::genfun::{Catalog, GenFun};
use cauchy_core::identity::{lhs_partial, rhs_truncated, EvalConfig};
use cauchy_core::numerics::rat;
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let x = rat(1, 3);
    let m = 8;
    for entry in Catalog::ALL {
        let g = GenFun::catalog(entry);
        let cfg = EvalConfig::exact(PointVector::new(vec![rat(1, 1)]), PointVector::new(vec![x.clone()]), m)?;
        let lhs = lhs_partial(&g, &cfg, m)?;
        let taylor = g.series(m).eval(&x);
        assert_eq!(lhs, taylor);
        assert_eq!(rhs_truncated(&g, &cfg, m)?, taylor);
        println!("{:<10} T_{m}(1/3) = {} ~ {:.12}", entry.expression(), lhs, lhs.to_f64());
    }
    Ok(())
}

fn main() {
    run().expect("maclaurin example");
}
