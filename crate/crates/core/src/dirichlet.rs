//! Dirichlet convolution and the transform `F` carrying Cauchy products to
//! Dirichlet products.
//!
//! `F(a)_n = prod_p a_{v_p(n) + 1}`. Primes not dividing `n` contribute
//! `a_1 = 1`, so each term is a finite product and `F` is exact at any
//! truncation as long as `a` has `floor(log2 N) + 1` terms.

use crate::alpha::alpha_input_len;
use crate::error::{Error, Result};
use crate::ring::RingValue;
use crate::series::{cauchy_mul, Seq};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest `e` with `p^e | n`.
pub fn padic_valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidArgument("valuation of 0 is undefined".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut e = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    Ok(e)
}

/// Prime factorization of `n`: primes strictly increasing, exponents `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Valuation {
    /// Factor by trial division.
    pub fn of(n: u64) -> Valuation {
        assert!(n >= 1, "only positive integers are factored");
        let mut factors = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p.saturating_mul(p) <= m {
            if m.is_multiple_of(p) {
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            factors.push((m, 1));
        }
        Valuation { n, factors }
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e)
    }
}

/// Smallest-prime-factor sieve for factoring every `n <= limit`.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    spf: Vec<u32>,
}

impl PrimeSieve {
    pub fn new(limit: usize) -> Self {
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                for j in (i..=limit).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
        PrimeSieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    /// Panics if `n` is zero or beyond the sieve limit.
    pub fn factorize(&self, n: usize) -> Valuation {
        assert!(n >= 1 && n <= self.limit(), "{n} outside sieve range");
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        Valuation { n: n as u64, factors }
    }
}

/// Dirichlet convolution `c_n = sum_{d | n} a_d b_{n/d}`.
pub fn dirichlet_mul(a: &Seq, b: &Seq) -> Result<Seq> {
    if a.ring() != b.ring() {
        return Err(Error::MixedRing(a.ring(), b.ring()));
    }
    let len = a.len().min(b.len());
    let mut out = vec![RingValue::zero(a.ring()); len];
    for d in 1..=len {
        let x = a.term(d);
        if x.is_zero() {
            continue;
        }
        for (j, slot) in (1..=len / d).zip(out.iter_mut().skip(d - 1).step_by(d)) {
            *slot += &(x * b.term(j));
        }
    }
    Seq::new(a.ring(), out)
}

fn check_leading_one(a: &Seq) -> Result<()> {
    if a.term(1).is_one() {
        Ok(())
    } else {
        Err(Error::BadConstantTerm { expected: "1".into(), found: a.term(1).to_string() })
    }
}

/// First `n_terms` terms of `F(a)`.
pub fn f_transform(a: &Seq, n_terms: usize) -> Result<Seq> {
    check_leading_one(a)?;
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    let needed = alpha_input_len(n_terms);
    if a.len() < needed {
        return Err(Error::InsufficientInput { needed, available: a.len() });
    }
    let sieve = PrimeSieve::new(n_terms);
    let terms = (1..=n_terms)
        .map(|n| {
            sieve
                .factorize(n)
                .factors
                .iter()
                .fold(RingValue::one(a.ring()), |acc, &(_, e)| &acc * a.term(e as usize + 1))
        })
        .collect();
    Seq::new(a.ring(), terms)
}

/// Both sides of `F(a * b) = F(a) (.) F(b)` and the indices where they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub n_terms: usize,
    pub lhs: Seq,
    pub rhs: Seq,
    pub mismatches: Vec<usize>,
}

impl HomomorphismReport {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_f_homomorphism(a: &Seq, b: &Seq, n_terms: usize) -> Result<HomomorphismReport> {
    let lhs = f_transform(&cauchy_mul(a, b)?, n_terms)?;
    let rhs = dirichlet_mul(&f_transform(a, n_terms)?, &f_transform(b, n_terms)?)?;
    let mismatches = (1..=n_terms).filter(|&n| lhs.term(n) != rhs.term(n)).collect();
    Ok(HomomorphismReport { n_terms, lhs, rhs, mismatches })
}

/// Outcome of reading `a` back out of `F(a)` through `a_{t+1} = F(a)_{2^t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub n_terms: usize,
    /// `F(a)` equals the Dirichlet identity `(1, 0, 0, ...)` up to `n_terms`.
    pub image_is_identity: bool,
    pub readback: Seq,
    /// The readback reproduces `a_1, ..., a_T`.
    pub readback_matches: bool,
}

impl InjectivityReport {
    /// The readback is faithful, and an identity image forces `a` to be the
    /// Cauchy identity on the recovered prefix.
    pub fn passes(&self) -> bool {
        self.readback_matches
            && (!self.image_is_identity || self.readback.terms()[1..].iter().all(RingValue::is_zero))
    }
}

/// Check the kernel argument for `F` on `n_terms` outputs, which determine
/// `a_1, ..., a_T` with `T = floor(log2 N) + 1`.
pub fn verify_f_injectivity(a: &Seq, n_terms: usize) -> Result<InjectivityReport> {
    let image = f_transform(a, n_terms)?;
    let image_is_identity = image.terms()[1..].iter().all(RingValue::is_zero) && image.term(1).is_one();
    let t_max = alpha_input_len(n_terms);
    let readback = Seq::new(a.ring(), (0..t_max).map(|t| image.term(1 << t).clone()).collect())?;
    let readback_matches = readback.terms() == &a.terms()[..t_max];
    Ok(InjectivityReport { n_terms, image_is_identity, readback, readback_matches })
}
