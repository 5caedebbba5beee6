use proptest::prelude::*;

use super::*;
use crate::genfun::{parse_genfun, Catalog};
use crate::numerics::rat;
use crate::partitions::{c_lambda, enumerate_by_weight, parity_class, ParityClass};

fn pts(v: &[(i64, i64)]) -> PointVector {
    PointVector::new(v.iter().map(|&(p, q)| rat(p, q)).collect())
}

fn ints(v: &[i64]) -> PointVector {
    PointVector::new(v.iter().map(|&p| Rational::from(p)).collect())
}

fn exact(a: PointVector, x: PointVector, m: usize) -> EvalConfig {
    EvalConfig::exact(a, x, m).unwrap()
}

fn cat(c: Catalog) -> GenFun {
    GenFun::catalog(c)
}

fn distinct_points(n: usize) -> impl Strategy<Value = PointVector> {
    prop::collection::vec((-9i64..=9, 1i64..=7), n)
        .prop_map(|v| PointVector::new(v.into_iter().map(|(a, b)| rat(a, b)).collect()))
        .prop_filter("distinct", |p| p.repeated_pair().is_none())
}

#[test]
fn config_validation() {
    assert_eq!(
        EvalConfig::exact(ints(&[1, 2]), ints(&[1]), 3).unwrap_err(),
        IdentityError::DimensionMismatch { a: 2, x: 1 }
    );
    assert_eq!(EvalConfig::exact(ints(&[]), ints(&[]), 3).unwrap_err(), IdentityError::NoPoints);
    assert!(matches!(
        EvalConfig::exact(ints(&[1, 2]), ints(&[3, 3]), 3).unwrap_err(),
        IdentityError::RepeatedPoints { which: "x", first: 0, second: 1 }
    ));
    assert_eq!(EvalConfig::analytic(ints(&[1]), ints(&[0]), 0.0, 10).unwrap_err(), IdentityError::InvalidTolerance);
    assert_eq!(
        EvalConfig::analytic(ints(&[1]), ints(&[0]), f64::NAN, 10).unwrap_err(),
        IdentityError::InvalidTolerance
    );
}

#[test]
fn collocation_examples() {
    let m = collocation_matrix_truncated(&cat(Catalog::Exp), &exact(ints(&[1]), ints(&[0]), 0), 7);
    assert_eq!(m, MatrixQ::identity(1).unwrap());

    let g = parse_genfun("1+x").unwrap();
    let m = collocation_matrix_truncated(&g, &exact(ints(&[1, 2]), ints(&[1, 3]), 1), 1);
    let expected = MatrixQ::from_rows(vec![vec![rat(2, 1), rat(3, 1)], vec![rat(4, 1), rat(7, 1)]]).unwrap();
    assert_eq!(m, expected);

    let m = collocation_matrix_truncated(&cat(Catalog::Geometric), &exact(ints(&[1]), pts(&[(1, 2)]), 4), 4);
    assert_eq!(m.get(0, 0), &rat(31, 16));
}

#[test]
fn maclaurin_case_matches_partial_sum() {
    let g = cat(Catalog::Geometric);
    let cfg = exact(ints(&[1]), pts(&[(1, 2)]), 4);
    assert_eq!(lhs_partial(&g, &cfg, 4).unwrap(), rat(31, 16));
    assert_eq!(rhs_truncated(&g, &cfg, 4).unwrap(), rat(31, 16));
}

#[test]
fn dependent_columns_give_zero() {
    let g = parse_genfun("1+x").unwrap();
    let cfg = exact(ints(&[1, 2, 3]), pts(&[(1, 2), (1, 3), (1, 5)]), 1);
    assert_eq!(rhs_truncated(&g, &cfg, 1).unwrap(), Rational::zero());
    assert_eq!(lhs_partial(&g, &cfg, 1).unwrap(), Rational::zero());
}

#[test]
fn lhs_small_caps() {
    let g = cat(Catalog::Exp);
    let cfg = exact(ints(&[1, 2, 3]), ints(&[4, 5, 6]), 2);
    // Only the empty partition: 1 / (0! 1! 2!).
    assert_eq!(lhs_partial(&g, &cfg, 2).unwrap(), rat(1, 2));
    assert_eq!(lhs_partial(&g, &cfg, 1).unwrap(), Rational::zero());
    assert_eq!(lhs_partial(&g, &cfg, 0).unwrap(), Rational::zero());
}

#[test]
fn verify_truncated_examples() {
    let r = verify_truncated(&cat(Catalog::Geometric), &exact(pts(&[(1, 2), (1, 3)]), pts(&[(1, 5), (1, 7)]), 10), 10)
        .unwrap();
    assert_eq!(r.verdict, Verdict::ExactMatch);
    assert_eq!(r.partition_count, 55);
    assert_eq!(r.residual, Value::Exact(Rational::zero()));

    let g = parse_genfun("1+x+x^2").unwrap();
    let r = verify_truncated(&g, &exact(ints(&[1, 2]), ints(&[3, 5]), 2), 2).unwrap();
    assert_eq!(r.verdict, Verdict::ExactMatch);
    // Exponent sets {1,0}, {2,0}, {2,1}: s_∅ s_∅ + s_1 s_1 + s_11 s_11.
    assert_eq!(r.lhs, Value::Exact(Rational::from(1 + 3 * 8 + 2 * 15)));
}

#[test]
fn sinh_only_odd_terms_contribute() {
    let g = cat(Catalog::Sinh);
    let cfg = exact(pts(&[(1, 2), (-1, 3)]), pts(&[(2, 5), (1, 7)]), 9);
    let opts = VerifyOptions { threads: None, log_terms: true };
    let r = verify_truncated_with(&g, &cfg, 9, &opts).unwrap();
    assert!(r.passed());
    for t in r.terms.unwrap() {
        if !t.term.is_zero() {
            assert_eq!(parity_class(&t.lambda, 2).unwrap(), ParityClass::Odd, "{}", t.lambda);
        }
    }
}

#[test]
fn logged_terms_sum_to_lhs() {
    let g = cat(Catalog::Log);
    let cfg = exact(pts(&[(1, 2), (1, 3), (-1, 4)]), pts(&[(1, 5), (2, 7), (0, 1)]), 6);
    let plain = verify_truncated(&g, &cfg, 6).unwrap();
    let logged = verify_truncated_with(&g, &cfg, 6, &VerifyOptions { threads: None, log_terms: true }).unwrap();
    assert_eq!(plain.lhs, logged.lhs);
    let terms = logged.terms.unwrap();
    assert_eq!(terms.len(), plain.partition_count);
    for t in &terms {
        assert_eq!(t.staircase, staircase(&t.lambda, 3).unwrap());
        assert_eq!(t.term, &t.g / &t.c * &t.s_a * &t.s_x);
    }
}

#[test]
fn parallel_sum_is_identical() {
    let g = cat(Catalog::GeomSqNeg);
    let cfg = exact(pts(&[(1, 2), (1, 3), (2, 3)]), pts(&[(1, 5), (-2, 7), (1, 9)]), 9);
    let serial = lhs_partial(&g, &cfg, 9).unwrap();
    for threads in [1, 2, 4] {
        assert_eq!(lhs_partial_parallel(&g, &cfg, 9, threads).unwrap(), serial);
    }
    let r = verify_truncated_with(&g, &cfg, 9, &VerifyOptions { threads: Some(3), log_terms: false }).unwrap();
    assert_eq!(r.lhs, Value::Exact(serial));
}

#[test]
fn telescoping() {
    let g = cat(Catalog::Sin);
    let cfg = exact(pts(&[(1, 2), (1, 3), (3, 2)]), pts(&[(1, 5), (1, 7), (-1, 2)]), 8);
    let n = 3;
    for k_cap in n - 1..8 {
        let step = lhs_partial(&g, &cfg, k_cap + 1).unwrap() - lhs_partial(&g, &cfg, k_cap).unwrap();
        let shell: Rational = lhs_terms(&g, &cfg, k_cap + 1)
            .unwrap()
            .into_iter()
            .filter(|t| t.staircase[0] == k_cap + 1)
            .map(|t| t.term)
            .sum();
        assert_eq!(step, shell, "k_cap = {k_cap}");
    }
}

#[test]
fn parity_vanishing() {
    for (entry, keep) in [
        (Catalog::GeomSq, ParityClass::Even),
        (Catalog::GeomSqNeg, ParityClass::Even),
        (Catalog::Sinh, ParityClass::Odd),
        (Catalog::Sin, ParityClass::Odd),
    ] {
        let g = cat(entry);
        for n in 1..=3 {
            let cfg = exact(
                PointVector::new((1..=n as i64).map(|i| rat(i, 3)).collect()),
                PointVector::new((1..=n as i64).map(|i| rat(-i, 5)).collect()),
                0,
            );
            for lambda in enumerate_by_weight(n, 8) {
                let t = term(&g, &cfg, &lambda).unwrap();
                if parity_class(&lambda, n).unwrap() != keep {
                    assert!(t.term.is_zero(), "{entry} {lambda} n={n}");
                }
            }
        }
    }
}

#[test]
fn single_schur_examples() {
    for n in 1..=3usize {
        let mu: Vec<usize> = (0..n).rev().collect();
        let cfg = exact(
            PointVector::new((1..=n as i64).map(Rational::from).collect()),
            PointVector::new((1..=n as i64).map(|i| rat(1, i + 1)).collect()),
            0,
        );
        let r = single_schur_check(&mu, &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::ExactMatch);
        assert_eq!(r.lhs, Value::Exact(Rational::one()));
    }
    let cfg = exact(ints(&[1, 2]), ints(&[1, 3]), 0);
    let r = single_schur_check(&[3, 0], &cfg).unwrap();
    // s_2(1,2) s_2(1,3) = 7 * 13
    assert_eq!(r.lhs, Value::Exact(Rational::from(91)));
    assert!(r.passed());

    let cfg = exact(pts(&[(1, 1), (1, 2), (-1, 3)]), pts(&[(2, 1), (1, 5), (3, 4)]), 0);
    assert!(single_schur_check(&[5, 2, 1], &cfg).unwrap().passed());

    assert!(matches!(
        single_schur_check(&[2, 2], &exact(ints(&[1, 2]), ints(&[3, 4]), 0)),
        Err(IdentityError::NotStrictlyDecreasing(_))
    ));
    assert!(matches!(
        single_schur_check(&[3], &exact(ints(&[1, 2]), ints(&[3, 4]), 0)),
        Err(IdentityError::NotStrictlyDecreasing(_))
    ));
}

#[test]
fn cauchy_product_examples() {
    assert_eq!(cauchy_product_check(&pts(&[(1, 2)]), &pts(&[(1, 2)])).unwrap(), (rat(4, 3), rat(4, 3)));
    let (l, r) = cauchy_product_check(&pts(&[(1, 2), (1, 3)]), &pts(&[(1, 5), (1, 7)])).unwrap();
    assert_eq!(l, r);
    let (l, r) = cauchy_product_check(&pts(&[(0, 1), (1, 3), (-2, 1)]), &pts(&[(1, 5), (1, 7), (2, 1)])).unwrap();
    assert_eq!(l, r);
    assert_eq!(
        cauchy_product_check(&ints(&[1, 2]), &pts(&[(1, 3), (1, 2)])).unwrap_err(),
        IdentityError::SingularEntry { i: 1, j: 1 }
    );
}

#[test]
fn vandermonde_square_examples() {
    assert_eq!(vandermonde_square_check(&ints(&[1, 2])).unwrap(), (rat(-3, 1), rat(-3, 1)));
    assert_eq!(vandermonde_square_check(&ints(&[1, -1])).unwrap(), (Rational::zero(), Rational::zero()));
    assert_eq!(vandermonde_square_check(&pts(&[(5, 7)])).unwrap(), (Rational::one(), Rational::one()));
    assert!(matches!(vandermonde_square_check(&ints(&[2, 2])), Err(IdentityError::RepeatedPoints { .. })));
}

#[test]
fn square_product_forms() {
    let a = pts(&[(1, 2), (1, 3), (-1, 5)]);
    let x = pts(&[(1, 4), (2, 3), (1, 7)]);
    for n in 1..=3 {
        let (an, xn) = (PointVector::new(a.values()[..n].to_vec()), PointVector::new(x.values()[..n].to_vec()));
        let (det, prod) = square_product_check(Catalog::GeomSq, &an, &xn).unwrap();
        assert_eq!(det, prod);
        // The determinant side of the 1/(1+x^2) form carries (-1)^(n(n-1)/2)
        // relative to the printed product.
        let (det, prod) = square_product_check(Catalog::GeomSqNeg, &an, &xn).unwrap();
        assert_eq!(det, Rational::parity_sign((n * (n - 1) / 2) as i64) * prod);
    }
    assert_eq!(square_product_check(Catalog::Exp, &a, &x).unwrap_err(), IdentityError::NoProductForm("exp".into()));
}

#[test]
fn symmetry_examples() {
    let cfg = exact(pts(&[(1, 2), (2, 1)]), pts(&[(1, 3), (-1, 5)]), 6);
    assert!(symmetry_check(&cat(Catalog::Exp), &cfg, 6, &[]).unwrap());
    assert!(symmetry_check(&cat(Catalog::Geometric), &cfg, 6, &[vec![1, 0]]).unwrap());
    assert!(symmetry_check(&cat(Catalog::Geometric), &cfg, 6, &[vec![0, 1]]).unwrap());
    assert_eq!(
        symmetry_check(&cat(Catalog::Geometric), &cfg, 6, &[vec![0, 0]]).unwrap_err(),
        IdentityError::InvalidPermutation(vec![0, 0])
    );
}

#[test]
fn audit_examples() {
    let lambdas: Vec<Partition> = enumerate_by_weight(3, 6).collect();
    for r in audit_example(AuditExample::Exp, 3, &lambdas).unwrap() {
        assert!(r.matches);
        assert_eq!(r.claimed, Rational::one());
    }
    let r = audit_example(AuditExample::Sin, 1, &[Partition::new(vec![1]).unwrap()]).unwrap();
    assert_eq!(r[0].computed, Rational::one());
    assert_eq!(r[0].claimed, rat(-1, 1));
    assert!(!r[0].matches);

    let r = audit_example(AuditExample::GeomSq, 2, &[Partition::new(vec![1]).unwrap()]).unwrap();
    assert_eq!(r[0].computed, rat(2, 1));
    assert!(r[0].matches);

    for r in audit_example(AuditExample::Log, 2, &enumerate_by_weight(2, 4).collect::<Vec<_>>()).unwrap() {
        if r.lambda.len() < 2 {
            assert!(r.computed.is_zero(), "{}", r.lambda);
        }
        assert_eq!(r.matches, r.claimed == r.computed);
    }
    for r in audit_example(AuditExample::Log, 1, &enumerate_by_weight(1, 6).collect::<Vec<_>>()).unwrap() {
        if !r.lambda.is_empty() {
            assert_eq!(r.claimed.abs(), r.computed.abs());
        }
    }
    assert_eq!("sinh".parse::<AuditExample>().unwrap(), AuditExample::Sinh);
    assert!("geom".parse::<AuditExample>().is_err());
}

#[test]
fn derivative_signs_on_parity_classes() {
    // Signs read off from the derivatives: 1/(1+x^2) has g^(2j)(0) = (-1)^j (2j)!
    // and sin has g^(2j+1)(0) = (-1)^j.
    for n in 1..=4usize {
        let nn = n as i64;
        for lambda in enumerate_by_weight(n, 10) {
            let w = lambda.weight() as i64;
            match parity_class(&lambda, n).unwrap() {
                ParityClass::Even => {
                    let g = g_lambda(&cat(Catalog::GeomSqNeg), &lambda, n).unwrap();
                    let e = (2 * w + nn * (nn - 1)) / 4;
                    assert_eq!(g, Rational::parity_sign(e) * c_lambda(&lambda, n).unwrap());
                }
                ParityClass::Odd => {
                    let g = g_lambda(&cat(Catalog::Sin), &lambda, n).unwrap();
                    let e = (2 * w + nn * (nn - 3)) / 4;
                    assert_eq!(g, Rational::parity_sign(e));
                }
                ParityClass::Mixed => {}
            }
        }
    }
}

#[test]
fn sign_exponents_are_integral() {
    for n in 1..=4usize {
        for lambda in enumerate_by_weight(n, 12) {
            let w = lambda.weight() as i64;
            let nn = n as i64;
            match parity_class(&lambda, n).unwrap() {
                ParityClass::Even => {
                    assert_eq!((2 * w - nn * (nn - 1)).rem_euclid(4), 0);
                    assert!(claimed_sign_exponent(AuditExample::GeomSqNeg, &lambda, n).unwrap().is_some());
                }
                ParityClass::Odd => {
                    assert_eq!((2 * w + nn * (nn + 1)).rem_euclid(4), 0);
                    assert!(claimed_sign_exponent(AuditExample::Sin, &lambda, n).unwrap().is_some());
                }
                ParityClass::Mixed => {
                    assert!(claimed_sign_exponent(AuditExample::Sin, &lambda, n).unwrap().is_none());
                }
            }
        }
    }
}

#[test]
fn analytic_exp_converges() {
    let cfg = EvalConfig::analytic(ints(&[1, 2]), pts(&[(1, 2), (1, 3)]), 1e-10, 40).unwrap();
    let r = verify_analytic(&cat(Catalog::Exp), &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::WithinTolerance);
    assert!(r.order <= 40);
    let trace = r.trace.unwrap();
    assert_eq!(trace.first().unwrap().k_cap, 1);
    assert!(trace.last().unwrap().residual <= 1e-10);
}

#[test]
fn analytic_geometric_matches_product() {
    let a = pts(&[(1, 2), (1, 3)]);
    let x = pts(&[(1, 5), (1, 7)]);
    let cfg = EvalConfig::analytic(a.clone(), x.clone(), 1e-12, 60).unwrap();
    let rhs = analytic_rhs(&cat(Catalog::Geometric), &cfg).unwrap();
    let (_, prod) = cauchy_product_check(&a, &x).unwrap();
    assert!((rhs - prod.to_f64()).abs() <= 1e-12);
    assert!(verify_analytic(&cat(Catalog::Geometric), &cfg).unwrap().passed());
}

#[test]
fn analytic_geomsq_matches_product_form() {
    let a = pts(&[(1, 2), (1, 3), (-3, 4)]);
    let x = pts(&[(1, 5), (2, 7), (1, 2)]);
    let cfg = EvalConfig::analytic(a.clone(), x.clone(), 1e-10, 60).unwrap();
    let rhs = analytic_rhs(&cat(Catalog::GeomSq), &cfg).unwrap();
    let (_, prod) = square_product_check(Catalog::GeomSq, &a, &x).unwrap();
    assert!((rhs - prod.to_f64()).abs() <= 1e-10 * prod.to_f64().abs().max(1.0));
}

#[test]
fn analytic_errors() {
    let cfg = EvalConfig::analytic(ints(&[1, 2]), pts(&[(1, 2), (1, 3)]), 1e-10, 40).unwrap();
    assert!(matches!(
        verify_analytic(&cat(Catalog::Geometric), &cfg),
        Err(IdentityError::OutsideRadius { index: 0, .. })
    ));
    let g = parse_genfun("1/(1-x^3)").unwrap();
    assert!(matches!(verify_analytic(&g, &cfg), Err(IdentityError::UnsupportedAnalyticEval(_))));
    let exact_cfg = exact(ints(&[1]), ints(&[0]), 3);
    assert_eq!(
        verify_analytic(&cat(Catalog::Exp), &exact_cfg).unwrap_err(),
        IdentityError::WrongMode { expected: "analytic" }
    );
    // a = 0 makes the radius condition vacuous.
    let zero = EvalConfig::analytic(ints(&[0]), ints(&[7]), 1e-12, 5).unwrap();
    let r = verify_analytic(&cat(Catalog::Geometric), &zero).unwrap();
    assert!(r.passed());
}

#[test]
fn report_json_round_trip() {
    let cfg = exact(pts(&[(1, 2), (1, 3)]), pts(&[(1, 5), (1, 7)]), 4);
    let r =
        verify_truncated_with(&cat(Catalog::Sinh), &cfg, 4, &VerifyOptions { threads: None, log_terms: true }).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"G\""));
    assert_eq!(serde_json::from_str::<IdentityReport>(&json).unwrap(), r);

    let cfg = EvalConfig::analytic(ints(&[1, 2]), pts(&[(1, 2), (1, 3)]), 1e-10, 40).unwrap();
    let r = verify_analytic(&cat(Catalog::Exp), &cfg).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<IdentityReport>(&json).unwrap(), r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn truncation_coherence(
        pair in (1usize..=3).prop_flat_map(|n| (distinct_points(n), distinct_points(n))),
        entry in prop::sample::select(Catalog::ALL.to_vec()),
    ) {
        let (a, x) = pair;
        let n = a.len();
        let g = cat(entry);
        let cfg = exact(a, x, 0);
        for m in n - 1..=8 {
            prop_assert_eq!(lhs_partial(&g, &cfg, m).unwrap(), rhs_truncated(&g, &cfg, m).unwrap());
        }
    }

    #[test]
    fn cauchy_product_holds(pair in (1usize..=3).prop_flat_map(|n| (distinct_points(n), distinct_points(n)))) {
        let (a, x) = pair;
        match cauchy_product_check(&a, &x) {
            Ok((l, r)) => prop_assert_eq!(l, r),
            Err(IdentityError::SingularEntry { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn vandermonde_square_holds(x in (1usize..=5).prop_flat_map(distinct_points)) {
        let (l, r) = vandermonde_square_check(&x).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn polynomial_truncation_is_exact(
        pair in (1usize..=3).prop_flat_map(|n| (distinct_points(n), distinct_points(n))),
        coeffs in prop::collection::vec((-5i64..=5, 1i64..=3), 1..=6),
    ) {
        let (a, x) = pair;
        let g = GenFun::polynomial(coeffs.iter().map(|&(p, q)| rat(p, q)).collect());
        let m = coeffs.len() - 1;
        let cfg = exact(a, x, m);
        let r = verify_truncated(&g, &cfg, m).unwrap();
        prop_assert_eq!(r.verdict, Verdict::ExactMatch);
    }
}
