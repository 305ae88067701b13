//! The isomorphism `phi` from `(H_R, +)` onto `(H~_R, *)`.
//!
//! `phi(a)` is the coefficient sequence of `prod_{k>=1} (1 + t^k)^{a_k}`;
//! the minus variant uses `(1 - t^k)^{a_k}`. Exponents may be integers or
//! polynomials in `x`. Rational exponents are rejected because `(1 + t)^{1/2}`
//! leaves the scalar ring's own sequences.
//!
//! Inverses go through the logarithm: the coefficient of `t^n` in
//! `sum_k a_k log(1 +- t^k)` is a divisor sum over the exponents and also a
//! signed sum of ordinary Bell values of `(u_2, u_3, ...)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bell::{bell_inversion_backward, log_coefficient_from_bell, BellTable};
use crate::error::{Error, Result};
use crate::ring::{factorial, RingTag, RingValue};
use crate::series::{mul_by_binomial_factor, Seq};

/// Sign of the factors `(1 +- t^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

impl FactorSign {
    fn as_i8(self) -> i8 {
        match self {
            FactorSign::Plus => 1,
            FactorSign::Minus => -1,
        }
    }
}

fn product(a: &Seq, n_terms: usize, sign: FactorSign, op: &'static str) -> Result<Seq> {
    if !matches!(a.ring(), RingTag::Int | RingTag::PolyX) {
        return Err(Error::UnsupportedRing { op, ring: a.ring() });
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    let needed = n_terms - 1;
    if a.len() < needed {
        return Err(Error::InsufficientInput { needed, available: a.len() });
    }
    let mut u = Seq::identity(a.ring(), n_terms);
    // factors with k >= n_terms only touch t^{n_terms} and beyond
    for k in 1..n_terms {
        mul_by_binomial_factor(&mut u, k, a.term(k), sign.as_i8());
    }
    Ok(u)
}

/// First `n_terms` coefficients of `prod_k (1 + t^k)^{a_k}`. Uses
/// `a_1, ..., a_{n_terms-1}`.
pub fn phi_plus(a: &Seq, n_terms: usize) -> Result<Seq> {
    product(a, n_terms, FactorSign::Plus, "phi_plus")
}

/// First `n_terms` coefficients of `prod_k (1 - t^k)^{a_k}`.
pub fn phi_minus(a: &Seq, n_terms: usize) -> Result<Seq> {
    product(a, n_terms, FactorSign::Minus, "phi_minus")
}

pub fn phi(a: &Seq, n_terms: usize, sign: FactorSign) -> Result<Seq> {
    match sign {
        FactorSign::Plus => phi_plus(a, n_terms),
        FactorSign::Minus => phi_minus(a, n_terms),
    }
}

/// `u_{n+1}` of `phi(a)` by direct summation over all multiplicity vectors
/// `i_1 + 2 i_2 + ... + n i_n = n` of the products `prod_j C(a_j, i_j)`,
/// with the extra factor `(-1)^{i_1 + ... + i_n}` for the minus variant.
///
/// Exponential in `n`; meant for small `n`.
pub fn phi_coefficient_direct(a: &Seq, n: usize, sign: FactorSign) -> Result<RingValue> {
    if a.len() < n {
        return Err(Error::InsufficientInput { needed: n, available: a.len() });
    }
    let ring = a.ring();
    if n == 0 {
        return Ok(RingValue::one(ring));
    }

    fn walk(a: &Seq, part: usize, remaining: usize, parts: usize, sign: FactorSign, acc: &RingValue, out: &mut RingValue) {
        if remaining == 0 {
            if sign == FactorSign::Minus && parts % 2 == 1 {
                *out = &*out - acc;
            } else {
                *out += acc;
            }
            return;
        }
        if part == 0 {
            return;
        }
        // multiplicity of `part`, from largest down
        for mult in (0..=remaining / part).rev() {
            let c = a.term(part).binomial(mult);
            if c.is_zero() {
                continue;
            }
            let next = acc * &c;
            walk(a, part - 1, remaining - mult * part, parts + mult, sign, &next, out);
        }
    }

    let mut out = RingValue::zero(ring);
    walk(a, n, n, 0, sign, &RingValue::one(ring), &mut out);
    Ok(out)
}

/// Coefficient of `t^n` in `sum_k a_k log(1 +- t^k)`:
/// `sum_{k | n} (k/n) (-1)^{n/k - 1} a_k` for the plus variant and
/// `-sum_{k | n} (k/n) a_k` for the minus variant.
pub fn log_coefficient_from_exponents(a: &Seq, n: usize, sign: FactorSign) -> Result<RingValue> {
    if n == 0 || a.len() < n {
        return Err(Error::InsufficientInput { needed: n.max(1), available: a.len() });
    }
    let a = a.to_rat();
    let mut acc = RingValue::zero(a.ring());
    for k in (1..=n).filter(|k| n.is_multiple_of(*k)) {
        let w = a.term(k).mul_rational(&BigRational::new(BigInt::from(k), BigInt::from(n)))?;
        let negate = match sign {
            FactorSign::Plus => (n / k).is_multiple_of(2),
            FactorSign::Minus => true,
        };
        acc = if negate { &acc - &w } else { &acc + &w };
    }
    Ok(acc)
}

fn check_unit_constant(u: &Seq) -> Result<()> {
    if u.term(1).is_one() {
        Ok(())
    } else {
        Err(Error::BadConstantTerm { expected: "1".into(), found: u.term(1).to_string() })
    }
}

fn inverse(u: &Seq, sign: FactorSign) -> Result<Seq> {
    check_unit_constant(u)?;
    if u.len() < 2 {
        return Err(Error::InsufficientInput { needed: 2, available: u.len() });
    }
    let work = u.to_rat();
    let ring = work.ring();
    let n_max = u.len() - 1;
    let tail = Seq::new(ring, work.terms()[1..].to_vec())?;
    let table = BellTable::ordinary(&tail, n_max)?;

    let mut a: Vec<RingValue> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // sum over proper divisors of the known lower exponents
        let mut lower = RingValue::zero(ring);
        for k in (1..n).filter(|k| n % k == 0) {
            let w = a[k - 1].mul_rational(&BigRational::new(BigInt::from(k), BigInt::from(n)))?;
            let negate = sign == FactorSign::Plus && (n / k) % 2 == 0;
            lower = if negate { &lower - &w } else { &lower + &w };
        }
        let log_n = log_coefficient_from_bell(&table, n)?;
        a.push(match sign {
            FactorSign::Plus => &log_n - &lower,
            FactorSign::Minus => -&(&log_n + &lower),
        });
    }
    let a = Seq::new(ring, a)?;
    if u.ring() == RingTag::Int {
        a.to_int()
    } else {
        Ok(a)
    }
}

/// Recover `a` from `u = phi_plus(a)`. Returns `a_1, ..., a_{N-1}` for an
/// input of length `N`.
pub fn phi_inverse_plus(u: &Seq) -> Result<Seq> {
    inverse(u, FactorSign::Plus)
}

/// Recover `a` from `u = phi_minus(a)`.
pub fn phi_inverse_minus(u: &Seq) -> Result<Seq> {
    inverse(u, FactorSign::Minus)
}

fn divisor_transform(a: &Seq, sign: FactorSign) -> Seq {
    // n! * k/n = k * (n-1)!, so the transform is exact in every ring
    let terms = (1..=a.len())
        .map(|n| {
            let fact = factorial(n - 1);
            let mut acc = RingValue::zero(a.ring());
            for k in (1..=n).filter(|k| n % k == 0) {
                let w = a.term(k).mul_int(&(BigInt::from(k) * &fact));
                let negate = match sign {
                    FactorSign::Plus => (n / k) % 2 == 0,
                    FactorSign::Minus => true,
                };
                acc = if negate { &acc - &w } else { &acc + &w };
            }
            acc
        })
        .collect();
    Seq::new(a.ring(), terms).expect("same ring")
}

/// `hat(a)_n = n! sum_{k | n} (k/n) (-1)^{n/k - 1} a_k`.
pub fn hat_transform(a: &Seq) -> Seq {
    divisor_transform(a, FactorSign::Plus)
}

/// `bar(a)_n = -n! sum_{k | n} (k/n) a_k`.
pub fn bar_transform(a: &Seq) -> Seq {
    divisor_transform(a, FactorSign::Minus)
}

/// `u_1 = 1`, `u_{n+1} = (1/n!) sum_{h=1}^{n} B(n, h)(x_1, ..., x_{n-h+1})`.
///
/// Fed with [`hat_transform`] or [`bar_transform`] of `a` this rebuilds
/// `phi_plus(a)` or `phi_minus(a)`.
pub fn phi_from_transformed(x: &Seq, n_terms: usize) -> Result<Seq> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument("number of terms must be positive".into()));
    }
    let ring = x.ring();
    let mut out = vec![RingValue::one(ring)];
    if n_terms > 1 {
        if x.len() < n_terms - 1 {
            return Err(Error::InsufficientInput { needed: n_terms - 1, available: x.len() });
        }
        let y = bell_inversion_backward(&x.truncate(n_terms - 1))?;
        for (n, v) in y.terms().iter().enumerate() {
            out.push(v.div_int(&factorial(n + 1))?);
        }
    }
    Seq::new(ring, out)
}
