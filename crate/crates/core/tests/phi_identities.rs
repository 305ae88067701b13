mod common;

use num_rational::BigRational;
use num_traits::Zero;

use seqcalc::bell::{log_coefficient_from_bell, BellTable};
use seqcalc::phi::{
    bar_transform, hat_transform, log_coefficient_from_exponents, phi_coefficient_direct, phi_from_transformed,
    phi_inverse_minus, phi_inverse_plus, phi_minus, phi_plus, FactorSign,
};
use seqcalc::series::{cauchy_mul, cw_add, series_log, Series};
use seqcalc::{RingTag, RingValue, Seq};

#[test]
fn homomorphism_law() {
    let mut rng = common::rng(21);
    for _ in 0..50 {
        let a = common::random_int_seq(&mut rng, 13, -5, 5);
        let b = common::random_int_seq(&mut rng, 13, -5, 5);
        let lhs = phi_plus(&cw_add(&a, &b).unwrap(), 14).unwrap();
        let rhs = cauchy_mul(&phi_plus(&a, 14).unwrap(), &phi_plus(&b, 14).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = phi_minus(&cw_add(&a, &b).unwrap(), 14).unwrap();
        let rhs = cauchy_mul(&phi_minus(&a, 14).unwrap(), &phi_minus(&b, 14).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn polynomial_exponent_homomorphism() {
    let a = Seq::constant(RingValue::x(), 7);
    let b = Seq::from_ints_in(RingTag::PolyX, [1, -2, 0, 3, 1, 1, -1]);
    let lhs = phi_plus(&cw_add(&a, &b).unwrap(), 8).unwrap();
    let rhs = cauchy_mul(&phi_plus(&a, 8).unwrap(), &phi_plus(&b, 8).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn round_trips() {
    let mut rng = common::rng(22);
    for _ in 0..30 {
        let a = common::random_int_seq(&mut rng, 15, -5, 5);
        assert_eq!(phi_inverse_plus(&phi_plus(&a, 16).unwrap()).unwrap(), a);
        assert_eq!(phi_inverse_minus(&phi_minus(&a, 16).unwrap()).unwrap(), a);
    }
}

#[test]
fn arbitrary_unit_series_have_integer_exponents() {
    let mut rng = common::rng(23);
    for _ in 0..10 {
        let mut u = common::random_int_seq(&mut rng, 12, -4, 4).into_terms();
        u[0] = RingValue::one(RingTag::Int);
        let u = Seq::new(RingTag::Int, u).unwrap();
        let a = phi_inverse_plus(&u).unwrap();
        assert_eq!(a.ring(), RingTag::Int);
        assert_eq!(phi_plus(&a, 12).unwrap(), u);
    }
}

#[test]
fn basis_elements() {
    for k in 1..=10 {
        let e = Seq::tabulate(RingTag::Int, 11, |n| RingValue::from_int(RingTag::Int, (n == k) as i64)).unwrap();
        let b = phi_plus(&e, 12).unwrap();
        for n in 1..=12 {
            let expected = (n == 1 || n == k + 1) as i64;
            assert_eq!(b.term(n), &RingValue::from_int(RingTag::Int, expected), "k={k} n={n}");
        }
    }
}

#[test]
fn direct_multinomial_sum_agrees() {
    let mut rng = common::rng(24);
    for _ in 0..10 {
        let a = common::random_int_seq(&mut rng, 8, -4, 4);
        let plus = phi_plus(&a, 9).unwrap();
        let minus = phi_minus(&a, 9).unwrap();
        for n in 0..=8 {
            assert_eq!(&phi_coefficient_direct(&a, n, FactorSign::Plus).unwrap(), plus.term(n + 1));
            assert_eq!(&phi_coefficient_direct(&a, n, FactorSign::Minus).unwrap(), minus.term(n + 1));
        }
    }
}

#[test]
fn divisor_side_equals_bell_side() {
    let mut rng = common::rng(25);
    for _ in 0..10 {
        let a = common::random_int_seq(&mut rng, 12, -5, 5);
        for sign in [FactorSign::Plus, FactorSign::Minus] {
            let u = seqcalc::phi::phi(&a, 13, sign).unwrap().to_rat();
            let tail = Seq::new(RingTag::Rat, u.terms()[1..].to_vec()).unwrap();
            let table = BellTable::ordinary(&tail, 12).unwrap();
            let log = series_log(&Series::new(u)).unwrap();
            for n in 1..=12 {
                let lhs = log_coefficient_from_exponents(&a, n, sign).unwrap();
                let rhs = log_coefficient_from_bell(&table, n).unwrap();
                assert_eq!(lhs, rhs, "n={n}");
                assert_eq!(&rhs, log.coeff(n));
            }
        }
    }
}

#[test]
fn transformed_sequences_rebuild_phi() {
    let mut rng = common::rng(26);
    for _ in 0..10 {
        let a = common::random_int_seq(&mut rng, 9, -5, 5);
        assert_eq!(phi_from_transformed(&hat_transform(&a), 10).unwrap(), phi_plus(&a, 10).unwrap());
        assert_eq!(phi_from_transformed(&bar_transform(&a), 10).unwrap(), phi_minus(&a, 10).unwrap());
    }
}

#[test]
fn bar_of_minus_x_is_scaled_sigma() {
    let a = Seq::constant(-&RingValue::x(), 20);
    let bar = bar_transform(&a);
    for n in 1..=20 {
        let coeff = BigRational::from_integer(
            seqcalc::ring::factorial(n - 1) * num_bigint::BigInt::from(common::sigma_brute(n)),
        );
        let p = bar.term(n).as_poly().unwrap();
        assert_eq!(p.coeff(1), coeff);
        assert!(p.coeff(0).is_zero());
        assert_eq!(p.degree(), Some(1));
    }
}

#[test]
fn named_inversions() {
    let p: Vec<i64> = seqcalc::darcais::partition_counts_pentagonal(30)
        .iter()
        .map(|v| i64::try_from(v).unwrap())
        .collect();
    let p = Seq::from_ints(p);
    let q: Vec<i64> = (1..30).map(common::ruler_brute).collect();
    assert_eq!(phi_inverse_plus(&p).unwrap(), Seq::from_ints(q));
    assert_eq!(phi_inverse_minus(&p).unwrap(), Seq::from_ints([-1; 29]));
}
