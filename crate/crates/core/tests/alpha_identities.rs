mod common;

use num_bigint::BigInt;

use seqcalc::alpha::{a085058_sequence, alpha, alpha_input_len, alpha_inverse, ruler_sequence};
use seqcalc::darcais::{partition_counts_pentagonal, partition_numbers};
use seqcalc::phi::{phi_inverse_plus, phi_plus};
use seqcalc::Seq;

#[test]
fn closed_form_matches_doubling_rule() {
    let a: Vec<i64> = (1..=8).map(|t| 10 * t + 7).collect();
    for len in 2..=127 {
        let expected = common::alpha_by_doubling(&a, len);
        let got = alpha(&Seq::from_ints(a.iter().copied()), len).unwrap();
        assert_eq!(common::ints(&got), common::big(&expected), "len={len}");
    }
}

#[test]
fn input_length_is_floor_log2_plus_one() {
    for n in 1..=300usize {
        let mut t = 0;
        while (1usize << t) <= n {
            t += 1;
        }
        assert_eq!(alpha_input_len(n), t, "n={n}");
    }
}

#[test]
fn inverse_reads_back() {
    let mut rng = common::rng(31);
    for _ in 0..10 {
        let a = common::random_int_seq(&mut rng, 7, -9, 9);
        assert_eq!(alpha_inverse(&alpha(&a, 100).unwrap()), a);
    }
}

#[test]
fn ruler_goldens_and_oracles() {
    let q = ruler_sequence(50).unwrap();
    let r = a085058_sequence(50).unwrap();
    assert_eq!(common::ints(&q)[..13], common::big(&[1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1])[..]);
    assert_eq!(common::ints(&r)[..8], common::big(&[2, 3, 2, 4, 2, 3, 2, 5])[..]);
    for n in 1..=50 {
        assert_eq!(common::ints(&q)[n - 1], BigInt::from(common::ruler_brute(n)));
        assert_eq!(common::ints(&r)[n - 1], BigInt::from(common::power_of_two_divisors(n)));
    }
}

#[test]
fn naturals_map_to_ruler() {
    let naturals = Seq::from_ints(1..=7);
    assert_eq!(alpha(&naturals, 100).unwrap(), ruler_sequence(100).unwrap());
    let shifted = Seq::from_ints(2..=8);
    assert_eq!(alpha(&shifted, 100).unwrap(), a085058_sequence(100).unwrap());
}

#[test]
fn r_generating_function() {
    // sum_{2^k <= N} t^{2^k} / (1 - t^{2^k}) + t / (1 - t), coefficients of t^1..t^N
    let n = 200;
    let mut coeffs = vec![0i64; n + 1];
    let mut step = 1;
    while step <= n {
        for m in (step..=n).step_by(step) {
            coeffs[m] += 1;
        }
        step *= 2;
    }
    for c in coeffs.iter_mut().skip(1) {
        *c += 1;
    }
    let r = a085058_sequence(n).unwrap();
    assert_eq!(common::ints(&r), common::big(&coeffs[1..]));
}

#[test]
fn chained_identity_gives_partitions() {
    let q = alpha(&Seq::from_ints(1..=6), 49).unwrap();
    let p = phi_plus(&q, 50).unwrap();
    assert_eq!(common::ints(&p), partition_counts_pentagonal(50));
    assert_eq!(phi_inverse_plus(&partition_numbers(50).unwrap()).unwrap(), q);
}

#[test]
fn overpartitions_from_r() {
    let r = a085058_sequence(49).unwrap();
    let ptilde = phi_plus(&r, 50).unwrap();
    assert_eq!(common::ints(&ptilde)[..5], common::big(&[1, 2, 4, 8, 14])[..]);
    assert_eq!(common::ints(&ptilde), common::overpartitions_brute(50));
}
