mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use seqcalc::bell::{
    bell_inversion_backward, bell_inversion_forward, complete_ordinary_bell, BellTable,
};
use seqcalc::ring::factorial;
use seqcalc::{RingTag, RingValue, Seq};

#[test]
fn cauchy_powers_match_multinomial_sum() {
    let mut rng = common::rng(11);
    for _ in 0..5 {
        let x = common::random_rat_seq(&mut rng, 10);
        let xs = common::rationals(&x);
        let table = BellTable::ordinary(&x, 10).unwrap();
        for n in 0..=10 {
            for k in 0..=n {
                let expected = common::ordinary_bell_multinomial(&xs, n, k);
                assert_eq!(table.get(n, k), RingValue::Rat(expected), "B0({n},{k})");
            }
        }
    }
}

#[test]
fn exponential_values_match_set_partitions() {
    let mut rng = common::rng(12);
    let x = common::random_rat_seq(&mut rng, 8);
    let xs = common::rationals(&x);
    let table = BellTable::exponential(&x, 8).unwrap();
    for n in 0..=8 {
        for k in 0..=n {
            let expected = common::exponential_bell_set_partitions(&xs, n, k);
            assert_eq!(table.get(n, k), RingValue::Rat(expected), "B({n},{k})");
        }
    }
}

#[test]
fn integer_exponential_table_stays_integral() {
    let x = Seq::from_ints([1; 8]);
    let table = BellTable::exponential(&x, 8).unwrap();
    // Stirling numbers of the second kind S(8, k)
    let s8 = [0, 1, 127, 966, 1701, 1050, 266, 28, 1];
    for (k, &s) in s8.iter().enumerate() {
        assert_eq!(table.get(8, k), RingValue::from_int(RingTag::Int, s));
    }
}

#[test]
fn complete_values_sum_rows() {
    let mut rng = common::rng(13);
    let x = common::random_rat_seq(&mut rng, 7);
    let xs = common::rationals(&x);
    for n in 0..=7 {
        let expected: BigRational = (0..=n).map(|k| common::ordinary_bell_multinomial(&xs, n, k)).sum();
        assert_eq!(complete_ordinary_bell(&x, n).unwrap(), RingValue::Rat(expected));
    }
}

#[test]
fn ordinary_exponential_bridge() {
    // sum_h (-1)^{h-1}/h B0(n,h)(u) == (1/n!) sum_h (-1)^{h-1} (h-1)! B(n,h)(1! u_1, 2! u_2, ...)
    let mut rng = common::rng(14);
    for _ in 0..4 {
        let u = common::random_rat_seq(&mut rng, 10);
        let scaled = Seq::tabulate(RingTag::Rat, 10, |m| u.term(m).mul_int(&factorial(m))).unwrap();
        let ordinary = BellTable::ordinary(&u, 10).unwrap();
        let exponential = BellTable::exponential(&scaled, 10).unwrap();
        for n in 1..=10 {
            let mut lhs = BigRational::zero();
            let mut rhs = BigRational::zero();
            for h in 1..=n {
                let sign = if h % 2 == 1 { 1 } else { -1 };
                lhs += ordinary.get(n, h).as_rational().unwrap() * BigRational::new(sign.into(), BigInt::from(h));
                rhs += exponential.get(n, h).as_rational().unwrap()
                    * BigRational::from_integer(BigInt::from(sign) * factorial(h - 1));
            }
            rhs /= BigRational::from_integer(factorial(n));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}

#[test]
fn inversion_round_trips() {
    let mut rng = common::rng(15);
    for _ in 0..10 {
        let y = common::random_rat_seq(&mut rng, 10);
        assert_eq!(bell_inversion_backward(&bell_inversion_forward(&y).unwrap()).unwrap(), y);
        assert_eq!(bell_inversion_forward(&bell_inversion_backward(&y).unwrap()).unwrap(), y);
    }
    for _ in 0..2 {
        let y = common::random_poly_seq(&mut rng, 8);
        assert_eq!(bell_inversion_backward(&bell_inversion_forward(&y).unwrap()).unwrap(), y);
        assert_eq!(bell_inversion_forward(&bell_inversion_backward(&y).unwrap()).unwrap(), y);
    }
}

#[test]
fn inversion_first_term_is_fixed() {
    let mut rng = common::rng(16);
    let x = common::random_rat_seq(&mut rng, 6);
    assert_eq!(bell_inversion_backward(&x).unwrap().term(1), x.term(1));
    assert_eq!(bell_inversion_forward(&x).unwrap().term(1), x.term(1));
}
