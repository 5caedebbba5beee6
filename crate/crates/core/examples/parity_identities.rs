// Even `g` only see partitions whose staircase exponents are all even.
// For `1/(1-x^2)` and `1/(1+x^2)` the determinant side has a product form
// built on `V(x^2) = V(x) ∏_{i<j}(x_i + x_j)`.

use std::error::Error;

use cauchy_core::genfun::{Catalog, GenFun};
use cauchy_core::identity::{lhs_terms, square_product_check, vandermonde_square_check, verify_truncated, EvalConfig};
use cauchy_core::numerics::Rational;
use cauchy_core::partitions::{parity_class, ParityClass};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let x: PointVector = "1/2,-1/3,3/4".parse()?;
    let (v2, product) = vandermonde_square_check(&x)?;
    println!("V(x^2) = {v2}, V(x) ∏(x_i + x_j) = {product}");
    assert_eq!(v2, product);

    let a: PointVector = "1/3,2/5,-1/2".parse()?;
    for entry in [Catalog::GeomSq, Catalog::GeomSqNeg] {
        let g = GenFun::catalog(entry);
        let cfg = EvalConfig::exact(a.clone(), x.clone(), 10)?;
        let terms = lhs_terms(&g, &cfg, 10)?;
        let contributing = terms.iter().filter(|t| !t.term.is_zero()).count();
        assert!(terms
            .iter()
            .filter(|t| !t.term.is_zero())
            .all(|t| parity_class(&t.lambda, 3) == Ok(ParityClass::Even)));
        assert!(verify_truncated(&g, &cfg, 10)?.passed());
        println!("{}: {} of {} terms contribute, all even-class", entry.expression(), contributing, terms.len());

        let (det_side, printed) = square_product_check(entry, &a, &x)?;
        let ratio = det_side.checked_div(&printed)?;
        println!("  det side / product side = {ratio}");
        match entry {
            Catalog::GeomSq => assert_eq!(ratio, Rational::one()),
            // Under V = ∏_{i<j}(x_i - x_j) the product side is off by (-1)^(n(n-1)/2).
            _ => assert_eq!(ratio, Rational::parity_sign(3)),
        }
    }
    Ok(())
}

fn main() {
    run().expect("parity identities example");
}
