//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Random configurations come from a fixed-seed ChaCha stream, so every run
//! checks the same points.

use std::time::{Duration, Instant};

use cauchy_core::cli;
use cauchy_core::genfun::{Catalog, GenFun};
use cauchy_core::identity::{
    cauchy_product_check, lhs_partial, rhs_truncated, single_schur_check, symmetry_check, vandermonde_square_check,
    verify_analytic, AuditExample, AuditRecord, EvalConfig, IdentityError,
};
use cauchy_core::numerics::{rat, Rational};
use cauchy_core::partitions::{enumerate_by_weight, parity_class, partitions_of, ParityClass, Partition};
use cauchy_core::schur::{bialternant, ssyt_schur_oracle, PointVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
        Err(detail) => {
            println!("criterion {id:>2} FAIL  {name}: {detail}");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + stream)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let q: i64 = rng.gen_range(1..=9);
    let p: i64 = rng.gen_range(-12..=12);
    rat(p, q)
}

fn random_points(rng: &mut ChaCha8Rng, n: usize) -> PointVector {
    loop {
        let p = PointVector::new((0..n).map(|_| random_rational(rng)).collect());
        if p.repeated_pair().is_none() {
            return p;
        }
    }
}

/// Maclaurin coefficients written out from the closed forms.
fn closed_form_coeff(entry: Catalog, k: usize) -> Rational {
    let fact = |k: usize| (1..=k as i64).fold(Rational::one(), |acc, i| acc * Rational::from(i));
    let alt = |j: usize| if j.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    match entry {
        Catalog::Geometric => Rational::one(),
        Catalog::GeomSq => {
            if k.is_multiple_of(2) {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        Catalog::GeomSqNeg => {
            if k.is_multiple_of(2) {
                alt(k / 2)
            } else {
                Rational::zero()
            }
        }
        Catalog::Exp => fact(k).recip().unwrap(),
        Catalog::Sinh => {
            if k % 2 == 1 {
                fact(k).recip().unwrap()
            } else {
                Rational::zero()
            }
        }
        Catalog::Sin => {
            if k % 2 == 1 {
                alt(k / 2) / fact(k)
            } else {
                Rational::zero()
            }
        }
        Catalog::Log => {
            if k == 0 {
                Rational::zero()
            } else {
                -Rational::from(k as i64).recip().unwrap()
            }
        }
    }
}

fn truncated_exactness(entries: &[Catalog]) -> Result<usize, String> {
    let mut rng = rng(1);
    let mut checks = 0;
    for &entry in entries {
        let g = GenFun::catalog(entry);
        for n in 1..=3usize {
            for _ in 0..5 {
                let cfg = EvalConfig::exact(random_points(&mut rng, n), random_points(&mut rng, n), 0)
                    .map_err(|e| e.to_string())?;
                for m in n - 1..=10 {
                    let lhs = lhs_partial(&g, &cfg, m).map_err(|e| e.to_string())?;
                    let rhs = rhs_truncated(&g, &cfg, m).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(format!(
                            "{} n={n} m={m} a=({}) x=({}): {lhs} != {rhs}",
                            entry.expression(),
                            cfg.a(),
                            cfg.x()
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

#[test]
fn criterion_01_truncated_identity_exactness() {
    let start = Instant::now();
    let outcome = truncated_exactness(&Catalog::ALL)
        .map(|checks| format!("{checks} exact comparisons in {:.1?}", start.elapsed()));
    report(1, "truncated identity exactness", outcome);
}

#[test]
fn criterion_02_cauchy_product_form() {
    let mut rng = rng(2);
    let outcome = (|| {
        let mut done = 0;
        while done < 20 {
            let n = 1 + done % 4;
            let (a, x) = (random_points(&mut rng, n), random_points(&mut rng, n));
            match cauchy_product_check(&a, &x) {
                Ok((det_side, product)) if det_side == product => done += 1,
                Ok((det_side, product)) => return Err(format!("a=({a}) x=({x}): {det_side} != {product}")),
                // a_j x_i = 1: not a valid configuration, draw again.
                Err(IdentityError::SingularEntry { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(format!("{done} configurations, n = 1..4"))
    })();
    report(2, "Cauchy product form", outcome);
}

#[test]
fn criterion_03_schur_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = rng(3);
    let lambdas: Vec<Partition> = (0..=6).flat_map(|w| partitions_of(w, w, w)).collect();
    let outcome = (|| {
        let mut checks = 0;
        for n in 1..=4 {
            for _ in 0..20 {
                let xs = random_points(&mut rng, n);
                for lambda in &lambdas {
                    let fast = bialternant(lambda, &xs).map_err(|e| e.to_string())?;
                    let slow = ssyt_schur_oracle(lambda, &xs);
                    if fast != slow {
                        return Err(format!("s_{lambda}({xs}): {fast} != {slow}"));
                    }
                    checks += 1;
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(30) {
            return Err(format!("took {elapsed:.1?}"));
        }
        Ok(format!("{checks} evaluations ({} partitions x 80 point sets) in {elapsed:.1?}", lambdas.len()))
    })();
    report(3, "Schur oracle equivalence", outcome);
}

#[test]
fn criterion_04_single_schur_identity() {
    let mut rng = rng(4);
    let outcome = (|| {
        for i in 0..20 {
            let n = 1 + i % 3;
            let mut pool: Vec<usize> = (0..=8).collect();
            pool.shuffle(&mut rng);
            let mut mu = pool[..n].to_vec();
            mu.sort_unstable_by(|a, b| b.cmp(a));
            let cfg = EvalConfig::exact(random_points(&mut rng, n), random_points(&mut rng, n), mu[0])
                .map_err(|e| e.to_string())?;
            let r = single_schur_check(&mu, &cfg).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(format!("μ = {mu:?}: {} != {}", r.lhs, r.rhs));
            }
        }
        Ok("20 random μ with μ_1 <= 8, n <= 3, all ExactMatch".to_string())
    })();
    report(4, "single-Schur identity", outcome);
}

#[test]
fn criterion_05_parity_vanishing() {
    let mut rng = rng(5);
    let outcome = (|| {
        let mut contributing = 0;
        for (entry, keep) in [
            (Catalog::GeomSq, ParityClass::Even),
            (Catalog::GeomSqNeg, ParityClass::Even),
            (Catalog::Sinh, ParityClass::Odd),
            (Catalog::Sin, ParityClass::Odd),
        ] {
            let g = GenFun::catalog(entry);
            for n in 1..=3 {
                let cfg = EvalConfig::exact(random_points(&mut rng, n), random_points(&mut rng, n), 0)
                    .map_err(|e| e.to_string())?;
                for lambda in enumerate_by_weight(n, 8) {
                    let t = cauchy_core::identity::term(&g, &cfg, &lambda).map_err(|e| e.to_string())?;
                    let class = parity_class(&lambda, n).map_err(|e| e.to_string())?;
                    if !t.g.is_zero() || !t.term.is_zero() {
                        if class != keep {
                            return Err(format!("{} n={n}: {lambda} ({class}) contributes", entry.expression()));
                        }
                        contributing += 1;
                    }
                }
            }
        }
        Ok(format!("{contributing} contributing partitions, all in the matching class"))
    })();
    report(5, "parity vanishing", outcome);
}

#[test]
fn criterion_06_maclaurin_degeneration() {
    let outcome = (|| {
        let points = [rat(1, 2), rat(-1, 3), rat(2, 7), rat(0, 1)];
        for entry in Catalog::ALL {
            let g = GenFun::catalog(entry);
            for x in &points {
                let cfg =
                    EvalConfig::exact(PointVector::new(vec![Rational::one()]), PointVector::new(vec![x.clone()]), 0)
                        .map_err(|e| e.to_string())?;
                let mut taylor = Rational::zero();
                for m in 0..=12 {
                    taylor += &(closed_form_coeff(entry, m) * x.pow(m));
                    let lhs = lhs_partial(&g, &cfg, m).map_err(|e| e.to_string())?;
                    if lhs != taylor {
                        return Err(format!("{} at {x}, m={m}: {lhs} != {taylor}", entry.expression()));
                    }
                }
            }
        }
        Ok("7 functions x 4 points x m = 0..12".to_string())
    })();
    report(6, "Maclaurin degeneration", outcome);
}

#[test]
fn criterion_07_vandermonde_square() {
    let mut rng = rng(7);
    let outcome = (|| {
        for i in 0..50 {
            let x = random_points(&mut rng, 1 + i % 5);
            let (l, r) = vandermonde_square_check(&x).map_err(|e| e.to_string())?;
            if l != r {
                return Err(format!("x = ({x}): {l} != {r}"));
            }
        }
        Ok("50 point sets, n = 1..5".to_string())
    })();
    report(7, "Vandermonde-square identity", outcome);
}

#[test]
fn criterion_08_analytic_convergence() {
    let start = Instant::now();
    let outcome = (|| {
        let pts = |s: &str| s.parse::<PointVector>().map_err(|e| e.to_string());
        let exp_cfg = EvalConfig::analytic(pts("1,2")?, pts("1/2,1/3")?, 1e-10, 40).map_err(|e| e.to_string())?;
        let exp = verify_analytic(&GenFun::catalog(Catalog::Exp), &exp_cfg).map_err(|e| e.to_string())?;
        if !exp.passed() {
            return Err(format!("exp: residual {} after k_cap 40", exp.residual));
        }
        // a = (1, 2) would put a_2 x_1 = 1 on the boundary of convergence of
        // 1/(1-x); a = (1, 1/2) keeps every a_j x_i inside.
        let geo_cfg = EvalConfig::analytic(pts("1,1/2")?, pts("1/2,1/3")?, 1e-10, 60).map_err(|e| e.to_string())?;
        let geo = verify_analytic(&GenFun::catalog(Catalog::Geometric), &geo_cfg).map_err(|e| e.to_string())?;
        if !geo.passed() {
            return Err(format!("1/(1-x): residual {} after k_cap 60", geo.residual));
        }
        let (_, product) = cauchy_product_check(geo_cfg.a(), geo_cfg.x()).map_err(|e| e.to_string())?;
        if (geo.rhs.to_f64() - product.to_f64()).abs() > 1e-10 {
            return Err(format!("1/(1-x): rhs {} vs product {}", geo.rhs, product));
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(30) {
            return Err(format!("took {elapsed:.1?}"));
        }
        Ok(format!("exp within 1e-10 at k_cap {}, 1/(1-x) at k_cap {}, {elapsed:.1?}", exp.order, geo.order))
    })();
    report(8, "analytic convergence", outcome);
}

#[test]
fn criterion_09_symmetry_suite() {
    let mut rng = rng(9);
    let outcome = (|| {
        let n = 3;
        let mut perms = Vec::new();
        for _ in 0..10 {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            perms.push(p);
        }
        for entry in [Catalog::Exp, Catalog::Geometric] {
            let g = GenFun::catalog(entry);
            let cfg = EvalConfig::exact(random_points(&mut rng, n), random_points(&mut rng, n), 8)
                .map_err(|e| e.to_string())?;
            if !symmetry_check(&g, &cfg, 8, &perms).map_err(|e| e.to_string())? {
                return Err(format!("{} not invariant at a=({}) x=({})", entry.expression(), cfg.a(), cfg.x()));
            }
        }
        Ok("exp and 1/(1-x), n = 3, 10 permutations each of a and x, plus a <-> x".to_string())
    })();
    report(9, "symmetry suite", outcome);
}

#[test]
fn criterion_10_audit_completeness() {
    let outcome = (|| {
        let mut total = 0;
        let mut mismatches = 0;
        for example in AuditExample::ALL {
            for n in 1..=3usize {
                let args = [
                    "cauchy",
                    "audit",
                    "--example",
                    example.id(),
                    "--n",
                    &n.to_string(),
                    "--maxweight",
                    "6",
                    "--format",
                    "json",
                ];
                let (mut out, mut err) = (Vec::new(), Vec::new());
                let code = cli::run(args, &mut out, &mut err);
                if code != 0 {
                    return Err(format!("{example} n={n}: exit {code}: {}", String::from_utf8_lossy(&err)));
                }
                let records: Vec<AuditRecord> = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
                let expected: Vec<Partition> = (0..=6).flat_map(|w| partitions_of(w, n, w)).collect();
                let mut got: Vec<Partition> = records.iter().map(|r| r.lambda.clone()).collect();
                let mut want = expected.clone();
                got.sort_by_key(|p| p.to_string());
                want.sort_by_key(|p| p.to_string());
                if got != want {
                    return Err(format!("{example} n={n}: {} records, expected {}", records.len(), expected.len()));
                }
                total += records.len();
                mismatches += records.iter().filter(|r| !r.matches).count();
            }
        }
        let entries: Vec<Catalog> = AuditExample::ALL.iter().map(|e| e.catalog()).collect();
        let checks = truncated_exactness(&entries)?;
        Ok(format!(
            "{total} records over 6 example ids ({mismatches} mismatches reported); {checks} exact identity checks still pass"
        ))
    })();
    report(10, "audit completeness", outcome);
}
