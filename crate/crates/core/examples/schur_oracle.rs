// Schur polynomials two ways: the bialternant ratio and a sum over
// semistandard tableaux.

use std::error::Error;

use cauchy_core::partitions::enumerate_by_weight;
use cauchy_core::schur::{bialternant, ssyt_schur_oracle, PointVector};

pub fn run() -> Result<(), Box<dyn Error>> {
    let xs: PointVector = "2,-1/2,1/3".parse()?;
    for lambda in enumerate_by_weight(3, 4) {
        let fast = bialternant(&lambda, &xs)?;
        let slow = ssyt_schur_oracle(&lambda, &xs);
        assert_eq!(fast, slow);
        println!("s_{:<10} = {}", lambda.to_string(), fast);
    }
    let ones: PointVector = "1,1,1".parse()?;
    let count = ssyt_schur_oracle(&"[2,1]".parse()?, &ones);
    println!("tableaux of shape [2,1] with entries <= 3: {count}");
    Ok(())
}

fn main() {
    run().expect("schur oracle example");
}
