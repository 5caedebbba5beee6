// Any parsed expression works in exact mode; coefficients come from series
// arithmetic on the expression tree.

use std::error::Error;

use cauchy_core::genfun::parse_genfun;
use cauchy_core::identity::{verify_truncated_with, EvalConfig, VerifyOptions};
use cauchy_core::schur::PointVector;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: PointVector = "1/2,1/3,1".parse()?;
    let x: PointVector = "1/5,-1/7,1/3".parse()?;
    for text in ["exp(x^2)/(1-x)", "sin(x)*sinh(x)", "ln(1+x+x^2)", "(1+2*x)^3/(2-x)"] {
        let g = parse_genfun(text)?;
        let head: Vec<String> = (0..6).map(|k| g.coeff(k).to_string()).collect();
        let cfg = EvalConfig::exact(a.clone(), x.clone(), 9)?;
        let opts = VerifyOptions { threads: Some(4), log_terms: false };
        let r = verify_truncated_with(&g, &cfg, 9, &opts)?;
        println!(
            "{text:<18} parity {:<5} radius {:<16} c = [{}, ...]  {}",
            g.parity(),
            g.radius(),
            head.join(", "),
            r.verdict
        );
        assert!(r.passed());
    }
    Ok(())
}

fn main() {
    run().expect("custom function example");
}
