//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls into the library code paths it is used to check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use seqcalc::{Poly, RingTag, RingValue, Seq};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_seq(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Seq {
    Seq::from_ints((0..len).map(|_| rng.gen_range(lo..=hi)))
}

pub fn random_leading_one(rng: &mut ChaCha8Rng, len: usize) -> Seq {
    Seq::from_ints((0..len).map(|i| if i == 0 { 1 } else { rng.gen_range(-5..=5) }))
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=6).into())
}

pub fn random_rat_seq(rng: &mut ChaCha8Rng, len: usize) -> Seq {
    Seq::new(RingTag::Rat, (0..len).map(|_| RingValue::Rat(random_rational(rng))).collect()).unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new((0..=deg).map(|_| random_rational(rng)).collect())
}

pub fn random_poly_seq(rng: &mut ChaCha8Rng, len: usize) -> Seq {
    Seq::new(RingTag::PolyX, (0..len).map(|_| RingValue::Poly(random_poly(rng, 2))).collect()).unwrap()
}

pub fn rationals(seq: &Seq) -> Vec<BigRational> {
    seq.terms().iter().map(|t| t.as_rational().expect("scalar")).collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn ints(seq: &Seq) -> Vec<BigInt> {
    seq.terms().iter().map(|t| t.as_int().expect("integer term").clone()).collect()
}

fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// All multiplicity vectors `(i_1, ..., i_n)` with `sum j i_j = n`.
pub fn multiplicity_vectors(n: usize) -> Vec<Vec<usize>> {
    fn go(part: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if remaining == 0 {
                let mut v = cur.clone();
                v.reverse();
                out.push(v);
            }
            return;
        }
        for m in 0..=remaining / part {
            cur.push(m);
            go(part - 1, remaining - m * part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `B0(n, k)(x)` by the restricted multinomial sum
/// `k! sum prod x_j^{i_j} / i_j!` over `sum j i_j = n`, `sum i_j = k`.
pub fn ordinary_bell_multinomial(x: &[BigRational], n: usize, k: usize) -> BigRational {
    if n == 0 {
        return if k == 0 { BigRational::one() } else { BigRational::zero() };
    }
    let mut total = BigRational::zero();
    for mv in multiplicity_vectors(n) {
        if mv.iter().sum::<usize>() != k {
            continue;
        }
        let mut term = BigRational::from_integer(fact(k));
        for (j, &i) in mv.iter().enumerate() {
            for _ in 0..i {
                term *= &x[j];
            }
            term /= BigRational::from_integer(fact(i));
        }
        total += term;
    }
    total
}

/// `B(n, k)(x)` by summing over set partitions of `{1..n}` into `k` blocks
/// (restricted growth strings), each block of size `s` contributing `x_s`.
pub fn exponential_bell_set_partitions(x: &[BigRational], n: usize, k: usize) -> BigRational {
    if n == 0 {
        return if k == 0 { BigRational::one() } else { BigRational::zero() };
    }
    fn go(pos: usize, n: usize, k: usize, labels: &mut Vec<usize>, max: usize, x: &[BigRational], acc: &mut BigRational) {
        if pos == n {
            if max == k {
                let mut sizes = vec![0usize; k];
                for &l in labels.iter() {
                    sizes[l] += 1;
                }
                let mut term = BigRational::one();
                for s in sizes {
                    term *= &x[s - 1];
                }
                *acc += term;
            }
            return;
        }
        for l in 0..=max.min(k - 1) {
            labels.push(l);
            go(pos + 1, n, k, labels, max.max(l + 1), x, acc);
            labels.pop();
        }
    }
    let mut acc = BigRational::zero();
    if k > 0 {
        go(0, n, k, &mut Vec::new(), 0, x, &mut acc);
    }
    acc
}

/// Naive truncated product of integer power series.
pub fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `prod_{k<len} (1 + t^k) / (1 - t^k)` by expanding each
/// factor explicitly.
pub fn overpartitions_brute(len: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    for k in 1..len {
        let mut plus = vec![BigInt::zero(); len];
        plus[0] = BigInt::one();
        plus[k] = BigInt::one();
        let geometric: Vec<BigInt> = (0..len).map(|i| if i % k == 0 { BigInt::one() } else { BigInt::zero() }).collect();
        acc = mul_trunc(&mul_trunc(&acc, &plus, len), &geometric, len);
    }
    acc
}

/// `tau(1..=len)` from `prod_k (1 - t^k)^24`, multiplying one binomial at a time.
pub fn tau_brute(len: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    for k in 1..len {
        for _ in 0..24 {
            for i in (k..len).rev() {
                let v = acc[i - k].clone();
                acc[i] -= v;
            }
        }
    }
    acc
}

/// `v_2(2n)` by repeated halving.
pub fn ruler_brute(n: usize) -> i64 {
    let mut m = 2 * n;
    let mut e = 0;
    while m.is_multiple_of(2) {
        m /= 2;
        e += 1;
    }
    e
}

/// Number of divisors of `2n` of the form `2^k`, by enumeration.
pub fn power_of_two_divisors(n: usize) -> i64 {
    (0..usize::BITS).filter(|&k| (2 * n).is_multiple_of(1usize << k)).count() as i64
}

pub fn divisor_count(n: usize) -> i64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as i64
}

/// Step-by-step doubling construction: start from `(a_1, a_2)`; for each
/// `i >= 2` locate the first `j` with `b_j = a_i`, copy `b_1..b_{j-1}` after
/// it and put `a_{i+1}` at `2j`. Requires pairwise distinct entries.
pub fn alpha_by_doubling(a: &[i64], len: usize) -> Vec<i64> {
    let mut b = vec![a[0], a[1]];
    let mut i = 1; // 0-based index of a_i with i >= 2
    while b.len() < len && i + 1 < a.len() {
        let j = b.iter().position(|&v| v == a[i]).expect("a_i already placed") + 1;
        let prefix: Vec<i64> = b[..j - 1].to_vec();
        b.truncate(j);
        b.extend(prefix);
        b.push(a[i + 1]);
        i += 1;
    }
    b.truncate(len);
    b
}

pub fn sigma_brute(n: usize) -> i64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| d as i64).sum()
}
