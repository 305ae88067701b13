//! Truncated sequences and their ordinary generating functions.
//!
//! Sequences are 1-indexed: `seq.term(1)` is the first element `a_1`, and the
//! generating function reads `a_1 + a_2 t + a_3 t^2 + ...`, so `a_{h+1}` is the
//! coefficient of `t^h`. OEIS listings start at offset 0 instead; indices here
//! are never shifted to match them.
//!
//! Binary operations truncate to the shorter operand. Nothing is implicitly
//! zero-extended.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{factorial, RingTag, RingValue};

/// A truncated sequence `(a_1, ..., a_N)` with `N >= 1`, all terms in one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    ring: RingTag,
    terms: Vec<RingValue>,
}

impl Seq {
    pub fn new(ring: RingTag, terms: Vec<RingValue>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument("a sequence needs at least one term".into()));
        }
        if let Some(bad) = terms.iter().find(|t| t.tag() != ring) {
            return Err(Error::MixedRing(ring, bad.tag()));
        }
        Ok(Seq { ring, terms })
    }

    /// Build from values, taking the ring from the first one.
    pub fn from_values(terms: Vec<RingValue>) -> Result<Self> {
        let ring = terms
            .first()
            .map(RingValue::tag)
            .ok_or_else(|| Error::InvalidArgument("a sequence needs at least one term".into()))?;
        Seq::new(ring, terms)
    }

    /// Integer sequence from machine integers. Panics on an empty iterator.
    pub fn from_ints<I: IntoIterator<Item = i64>>(values: I) -> Self {
        Seq::from_ints_in(RingTag::Int, values)
    }

    /// Image of machine integers in `ring`. Panics on an empty iterator.
    pub fn from_ints_in<I: IntoIterator<Item = i64>>(ring: RingTag, values: I) -> Self {
        let terms: Vec<_> = values.into_iter().map(|v| RingValue::from_int(ring, v)).collect();
        Seq::new(ring, terms).expect("non-empty integer sequence")
    }

    pub(crate) fn from_parts(ring: RingTag, terms: Vec<RingValue>) -> Self {
        debug_assert!(!terms.is_empty() && terms.iter().all(|t| t.tag() == ring));
        Seq { ring, terms }
    }

    pub fn zero(ring: RingTag, len: usize) -> Self {
        Seq::constant(RingValue::zero(ring), len)
    }

    /// The Cauchy identity `(1, 0, 0, ...)`.
    pub fn identity(ring: RingTag, len: usize) -> Self {
        let mut s = Seq::zero(ring, len);
        s.terms[0] = RingValue::one(ring);
        s
    }

    pub fn constant(value: RingValue, len: usize) -> Self {
        assert!(len >= 1, "a sequence needs at least one term");
        Seq { ring: value.tag(), terms: vec![value; len] }
    }

    /// `(1, 2, 3, ..., len)` over `ring`.
    pub fn naturals(ring: RingTag, len: usize) -> Self {
        Seq::from_ints_in(ring, 1..=len as i64)
    }

    /// Sequence whose `n`-th term is `f(n)`, `n = 1..=len`.
    pub fn tabulate(ring: RingTag, len: usize, mut f: impl FnMut(usize) -> RingValue) -> Result<Self> {
        Seq::new(ring, (1..=len).map(&mut f).collect())
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `n`-th term, 1-indexed. Panics when `n == 0` or `n > len`.
    pub fn term(&self, n: usize) -> &RingValue {
        assert!(n >= 1, "sequences are 1-indexed");
        &self.terms[n - 1]
    }

    pub fn get(&self, n: usize) -> Option<&RingValue> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn terms(&self) -> &[RingValue] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<RingValue> {
        self.terms
    }

    /// Keep the first `len` terms. `len` is clamped to `1..=self.len()`.
    pub fn truncate(&self, len: usize) -> Seq {
        let len = len.clamp(1, self.len());
        Seq { ring: self.ring, terms: self.terms[..len].to_vec() }
    }

    /// Promote integer terms to rationals.
    pub fn to_rat(&self) -> Seq {
        match self.ring {
            RingTag::Int => Seq {
                ring: RingTag::Rat,
                terms: self.terms.iter().map(RingValue::to_rat).collect(),
            },
            _ => self.clone(),
        }
    }

    /// Demote integral rational terms to integers.
    pub fn to_int(&self) -> Result<Seq> {
        let terms = self.terms.iter().map(RingValue::to_int).collect::<Result<Vec<_>>>()?;
        Ok(Seq { ring: RingTag::Int, terms })
    }

    pub fn neg(&self) -> Seq {
        Seq { ring: self.ring, terms: self.terms.iter().map(|t| -t).collect() }
    }

    fn check_ring(&self, other: &Seq) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRing(self.ring, other.ring))
        }
    }

    fn require(&self, op: &'static str, allowed: &[RingTag]) -> Result<()> {
        if allowed.contains(&self.ring) {
            Ok(())
        } else {
            Err(Error::UnsupportedRing { op, ring: self.ring })
        }
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// A truncated ordinary generating function `sum_h u_{h+1} t^h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series(Seq);

impl Series {
    pub fn new(coeffs: Seq) -> Self {
        Series(coeffs)
    }

    /// Coefficient of `t^h`.
    pub fn coeff(&self, h: usize) -> &RingValue {
        self.0.term(h + 1)
    }

    pub fn coeffs(&self) -> &Seq {
        &self.0
    }

    pub fn into_seq(self) -> Seq {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<Seq> for Series {
    fn from(s: Seq) -> Self {
        Series(s)
    }
}

/// Componentwise sum.
pub fn cw_add(a: &Seq, b: &Seq) -> Result<Seq> {
    a.check_ring(b)?;
    let terms = a.terms.iter().zip(&b.terms).map(|(x, y)| x + y).collect();
    Ok(Seq::from_parts(a.ring, terms))
}

/// Componentwise difference.
pub fn cw_sub(a: &Seq, b: &Seq) -> Result<Seq> {
    a.check_ring(b)?;
    let terms = a.terms.iter().zip(&b.terms).map(|(x, y)| x - y).collect();
    Ok(Seq::from_parts(a.ring, terms))
}

/// Cauchy (convolution) product: `c_{n+1} = sum_h a_{h+1} b_{n-h+1}`.
pub fn cauchy_mul(a: &Seq, b: &Seq) -> Result<Seq> {
    a.check_ring(b)?;
    let len = a.len().min(b.len());
    let mut out = vec![RingValue::zero(a.ring); len];
    for (i, x) in a.terms[..len].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.terms[..len - i].iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    Ok(Seq::from_parts(a.ring, out))
}

/// Cauchy inverse of a sequence whose first term is a unit.
pub fn cauchy_inv(a: &Seq) -> Result<Seq> {
    let lead_inv = a.term(1).invert()?;
    let neg_lead_inv = -&lead_inv;
    let mut out: Vec<RingValue> = Vec::with_capacity(a.len());
    out.push(lead_inv);
    for n in 1..a.len() {
        let mut acc = RingValue::zero(a.ring);
        for h in 1..=n {
            acc += &(&a.terms[h] * &out[n - h]);
        }
        out.push(&neg_lead_inv * &acc);
    }
    Ok(Seq::from_parts(a.ring, out))
}

/// `k`-th Cauchy power, truncated to the length of `a`.
pub fn cauchy_pow(a: &Seq, k: usize) -> Seq {
    let mut acc = Seq::identity(a.ring, a.len());
    for _ in 0..k {
        acc = cauchy_mul(&acc, a).expect("same ring");
    }
    acc
}

/// Hurwitz (binomial convolution) product:
/// `c_{n+1} = sum_h C(n, h) a_{h+1} b_{n-h+1}`.
pub fn hurwitz_mul(a: &Seq, b: &Seq) -> Result<Seq> {
    a.check_ring(b)?;
    let len = a.len().min(b.len());
    let mut out = Vec::with_capacity(len);
    let mut row = vec![BigInt::one()];
    for n in 0..len {
        let mut acc = RingValue::zero(a.ring);
        for (h, c) in row.iter().enumerate() {
            acc += &(&a.terms[h] * &b.terms[n - h]).mul_int(c);
        }
        out.push(acc);
        let mut next = vec![BigInt::one(); n + 2];
        for h in 1..=n {
            next[h] = &row[h - 1] + &row[h];
        }
        row = next;
    }
    Ok(Seq::from_parts(a.ring, out))
}

/// Factorial scaling `b_{n+1} = n! a_{n+1}`, an isomorphism from the Cauchy
/// ring onto the Hurwitz ring.
pub fn gamma(a: &Seq) -> Seq {
    let mut fact = BigInt::one();
    let terms = a
        .terms
        .iter()
        .enumerate()
        .map(|(n, t)| {
            if n > 0 {
                fact *= BigInt::from(n);
            }
            t.mul_int(&fact)
        })
        .collect();
    Seq::from_parts(a.ring, terms)
}

/// Inverse of [`gamma`]: `b_{n+1} = a_{n+1} / n!`. Fails over `Int` when a
/// division is inexact.
pub fn gamma_inv(a: &Seq) -> Result<Seq> {
    let terms = a
        .terms
        .iter()
        .enumerate()
        .map(|(n, t)| t.div_int(&factorial(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Seq::from_parts(a.ring, terms))
}

/// Formal logarithm of a series with constant term 1.
///
/// Uses `h w_h = h u_h - sum_{j=1}^{h-1} j w_j u_{h-j}` (from `U' = U W'`),
/// indexing coefficients by powers of `t`.
pub fn series_log(u: &Series) -> Result<Series> {
    let u = &u.0;
    u.require("series_log", &[RingTag::Rat, RingTag::PolyX])?;
    if !u.term(1).is_one() {
        return Err(Error::BadConstantTerm { expected: "1".into(), found: u.term(1).to_string() });
    }
    let c = &u.terms;
    let mut w: Vec<RingValue> = vec![RingValue::zero(u.ring)];
    for h in 1..u.len() {
        let mut acc = c[h].mul_int(&BigInt::from(h));
        for j in 1..h {
            acc = &acc - &(&w[j] * &c[h - j]).mul_int(&BigInt::from(j));
        }
        w.push(acc.div_int(&BigInt::from(h))?);
    }
    Ok(Series(Seq::from_parts(u.ring, w)))
}

/// Formal exponential of a series with zero constant term.
///
/// Uses `h e_h = sum_{j=1}^{h} j w_j e_{h-j}` (from `E' = W' E`).
pub fn series_exp(w: &Series) -> Result<Series> {
    let w = &w.0;
    w.require("series_exp", &[RingTag::Rat, RingTag::PolyX])?;
    if !w.term(1).is_zero() {
        return Err(Error::BadConstantTerm { expected: "0".into(), found: w.term(1).to_string() });
    }
    let c = &w.terms;
    let mut e: Vec<RingValue> = vec![RingValue::one(w.ring)];
    for h in 1..w.len() {
        let mut acc = RingValue::zero(w.ring);
        for j in 1..=h {
            if c[j].is_zero() {
                continue;
            }
            acc += &(&c[j] * &e[h - j]).mul_int(&BigInt::from(j));
        }
        e.push(acc.div_int(&BigInt::from(h))?);
    }
    Ok(Series(Seq::from_parts(w.ring, e)))
}

/// The single factor `(1 + sign * t^k)^e` truncated to `len` coefficients.
pub fn binomial_factor(k: usize, e: &RingValue, sign: i8, len: usize) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidArgument("factor degree k must be positive".into()));
    }
    if len == 0 {
        return Err(Error::InvalidArgument("series length must be positive".into()));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {sign}")));
    }
    let ring = e.tag();
    let mut terms = vec![RingValue::zero(ring); len];
    for (i, idx) in (0..len).step_by(k).enumerate() {
        let c = e.binomial(i);
        terms[idx] = if sign < 0 && i % 2 == 1 { -&c } else { c };
    }
    Ok(Series(Seq::from_parts(ring, terms)))
}

/// Multiply `acc` in place by `(1 + sign * t^k)^e`, touching only the
/// nonzero coefficients of the factor.
pub(crate) fn mul_by_binomial_factor(acc: &mut Seq, k: usize, e: &RingValue, sign: i8) {
    debug_assert_eq!(acc.ring, e.tag());
    let len = acc.len();
    if e.is_zero() || k >= len {
        return;
    }
    let ring = e.tag();
    let mut factor: Vec<(usize, RingValue)> = Vec::new();
    // binom(e, i) = binom(e, i-1) * (e - i + 1) / i
    let mut binom = RingValue::one(ring);
    for (i, idx) in (1..).map(|i| (i, i * k)).take_while(|&(_, idx)| idx < len) {
        binom = (&binom * &(e - &RingValue::from_int(ring, i - 1)))
            .div_int(&BigInt::from(i))
            .expect("generalized binomial is integral");
        if binom.is_zero() {
            break;
        }
        let c = if sign < 0 && i % 2 == 1 { -&binom } else { binom.clone() };
        factor.push((idx, c));
    }
    let old = acc.terms.clone();
    for (idx, c) in &factor {
        for (n, x) in old[..len - idx].iter().enumerate() {
            if !x.is_zero() {
                acc.terms[n + idx] += &(x * c);
            }
        }
    }
}
