//! The doubling transform `alpha` and the ruler sequences it produces.
//!
//! `alpha(a)` places `a_t` at every index `2^{t-1} (2k - 1)`, so
//! `alpha(a)_n = a_{v(n) + 1}` where `v` is the 2-adic valuation. The
//! step-by-step doubling rule only determines the same output when the
//! entries of `a` are pairwise distinct; positions are used here, never values.

use crate::error::{Error, Result};
use crate::ring::{RingTag, RingValue};
use crate::series::Seq;

fn two_adic(n: usize) -> usize {
    n.trailing_zeros() as usize
}

/// Number of input terms `alpha` needs for `n_terms` outputs: `floor(log2 N) + 1`.
pub fn alpha_input_len(n_terms: usize) -> usize {
    (usize::BITS - n_terms.leading_zeros()) as usize
}

/// First `n_terms` terms of `alpha(a)`.
pub fn alpha(a: &Seq, n_terms: usize) -> Result<Seq> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    let needed = alpha_input_len(n_terms);
    if a.len() < needed {
        return Err(Error::InsufficientInput { needed, available: a.len() });
    }
    let terms = (1..=n_terms).map(|n| a.term(two_adic(n) + 1).clone()).collect();
    Seq::new(a.ring(), terms)
}

/// Read `a_t = b_{2^{t-1}}` back for `t = 1, ..., floor(log2 N) + 1`.
pub fn alpha_inverse(b: &Seq) -> Seq {
    let len = alpha_input_len(b.len());
    let terms = (0..len).map(|t| b.term(1 << t).clone()).collect();
    Seq::new(b.ring(), terms).expect("non-empty")
}

/// `q_n = v_2(2n)`: `(1, 2, 1, 3, 1, 2, 1, 4, ...)`. OEIS A001511 (offset 1).
pub fn ruler_sequence(n_terms: usize) -> Result<Seq> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    Seq::tabulate(RingTag::Int, n_terms, |n| RingValue::from_int(RingTag::Int, two_adic(2 * n) as i64))
}

/// `r_n = q_n + 1`, the number of divisors of `2n` that are powers of two:
/// `(2, 3, 2, 4, ...)`. OEIS A085058 lists it from offset 0.
pub fn a085058_sequence(n_terms: usize) -> Result<Seq> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    Seq::tabulate(RingTag::Int, n_terms, |n| RingValue::from_int(RingTag::Int, two_adic(2 * n) as i64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly;

    #[test]
    fn symbolic_prefix() {
        // a_t = x^t keeps entries distinguishable in the output
        let a = Seq::tabulate(RingTag::PolyX, 4, |t| RingValue::Poly(Poly::x().shift(t - 1))).unwrap();
        let b = alpha(&a, 8).unwrap();
        let pick = |t: usize| a.term(t).clone();
        let expected = [pick(1), pick(2), pick(1), pick(3), pick(1), pick(2), pick(1), pick(4)];
        assert_eq!(b.terms(), &expected[..]);
    }

    #[test]
    fn naturals_give_ruler() {
        let n = Seq::naturals(RingTag::Int, 4);
        let q = alpha(&n, 13).unwrap();
        assert_eq!(q, Seq::from_ints([1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1]));
        let a = Seq::from_ints([2, 3, 4, 5]);
        assert_eq!(alpha(&a, 8).unwrap(), Seq::from_ints([2, 3, 2, 4, 2, 3, 2, 5]));
    }

    #[test]
    fn input_length_requirements() {
        assert_eq!(alpha_input_len(1), 1);
        assert_eq!(alpha_input_len(7), 3);
        assert_eq!(alpha_input_len(8), 4);
        let a = Seq::from_ints([1, 2, 3]);
        assert!(alpha(&a, 7).is_ok());
        assert_eq!(alpha(&a, 8), Err(Error::InsufficientInput { needed: 4, available: 3 }));
    }

    #[test]
    fn inverse_reads_powers_of_two() {
        let q = ruler_sequence(20).unwrap();
        assert_eq!(alpha_inverse(&q), Seq::from_ints([1, 2, 3, 4, 5]));
        let c = Seq::from_ints([7; 9]);
        assert_eq!(alpha_inverse(&c), Seq::from_ints([7; 4]));
    }

    #[test]
    fn ruler_listings() {
        assert_eq!(ruler_sequence(13).unwrap(), Seq::from_ints([1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1]));
        assert_eq!(a085058_sequence(8).unwrap(), Seq::from_ints([2, 3, 2, 4, 2, 3, 2, 5]));
        let q = ruler_sequence(128).unwrap();
        for n in 1..=64 {
            assert!(q.term(2 * n - 1).is_one());
            assert_eq!(q.term(2 * n), &(q.term(n) + &RingValue::one(RingTag::Int)));
        }
    }
}
