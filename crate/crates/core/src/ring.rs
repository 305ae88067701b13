//! Exact scalar rings: big integers, rationals and univariate polynomials
//! over the rationals.
//!
//! Every value is kept in canonical form (reduced rationals, trimmed
//! polynomials) so that `==` is structural equality of ring elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which of the supported rings a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Int,
    Rat,
    PolyX,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingTag::Int => "int",
            RingTag::Rat => "rat",
            RingTag::PolyX => "polyx",
        })
    }
}

/// Dense polynomial in `x` with rational coefficients, lowest degree first.
///
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Poly::new(coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![BigRational::zero(), BigRational::one()] }
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

/// Coefficient list `[c0,c1,...]`; rationals render as `p/q`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// An exact element of one of the supported commutative rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingValue {
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
}

impl RingValue {
    pub fn tag(&self) -> RingTag {
        match self {
            RingValue::Int(_) => RingTag::Int,
            RingValue::Rat(_) => RingTag::Rat,
            RingValue::Poly(_) => RingTag::PolyX,
        }
    }

    pub fn zero(ring: RingTag) -> Self {
        RingValue::from_int(ring, BigInt::zero())
    }

    pub fn one(ring: RingTag) -> Self {
        RingValue::from_int(ring, BigInt::one())
    }

    /// Image of an integer under the canonical map `Z -> R`.
    pub fn from_int(ring: RingTag, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        match ring {
            RingTag::Int => RingValue::Int(n),
            RingTag::Rat => RingValue::Rat(BigRational::from_integer(n)),
            RingTag::PolyX => RingValue::Poly(Poly::constant(BigRational::from_integer(n))),
        }
    }

    /// Image of a rational; fails over `Int` unless the rational is integral.
    pub fn from_rational(ring: RingTag, q: BigRational) -> Result<Self> {
        match ring {
            RingTag::Int if q.is_integer() => Ok(RingValue::Int(q.to_integer())),
            RingTag::Int => Err(Error::IntegralityViolation(q.to_string())),
            RingTag::Rat => Ok(RingValue::Rat(q)),
            RingTag::PolyX => Ok(RingValue::Poly(Poly::constant(q))),
        }
    }

    /// The indeterminate `x` of the polynomial ring.
    pub fn x() -> Self {
        RingValue::Poly(Poly::x())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(n) => n.is_zero(),
            RingValue::Rat(q) => q.is_zero(),
            RingValue::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == RingValue::one(self.tag())
    }

    fn check(&self, other: &RingValue) -> Result<()> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(Error::MixedRing(self.tag(), other.tag()))
        }
    }

    pub fn add(&self, other: &RingValue) -> Result<RingValue> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn sub(&self, other: &RingValue) -> Result<RingValue> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn mul(&self, other: &RingValue) -> Result<RingValue> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiply by an integer scalar.
    pub fn mul_int(&self, k: &BigInt) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Int(n * k),
            RingValue::Rat(q) => RingValue::Rat(q * BigRational::from_integer(k.clone())),
            RingValue::Poly(p) => RingValue::Poly(p.scale(&BigRational::from_integer(k.clone()))),
        }
    }

    /// Multiply by a rational scalar. Over `Int` the result must be integral.
    pub fn mul_rational(&self, q: &BigRational) -> Result<RingValue> {
        match self {
            RingValue::Int(n) => {
                let v = BigRational::from_integer(n.clone()) * q;
                if v.is_integer() {
                    Ok(RingValue::Int(v.to_integer()))
                } else {
                    Err(Error::NotDivisible { value: n.to_string(), divisor: q.recip().to_string() })
                }
            }
            RingValue::Rat(r) => Ok(RingValue::Rat(r * q)),
            RingValue::Poly(p) => Ok(RingValue::Poly(p.scale(q))),
        }
    }

    /// Exact division by a nonzero integer. Over `Int` it fails when the
    /// quotient is not an integer.
    pub fn div_int(&self, d: &BigInt) -> Result<RingValue> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        match self {
            RingValue::Int(n) => {
                let (quot, rem) = n.div_rem(d);
                if rem.is_zero() {
                    Ok(RingValue::Int(quot))
                } else {
                    Err(Error::NotDivisible { value: n.to_string(), divisor: d.to_string() })
                }
            }
            _ => self.mul_rational(&BigRational::new(BigInt::one(), d.clone())),
        }
    }

    pub fn pow(&self, e: u32) -> RingValue {
        let mut acc = RingValue::one(self.tag());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Generalized binomial coefficient `a(a-1)...(a-i+1)/i!`.
    ///
    /// Over `Int` the value is always an exact integer.
    pub fn binomial(&self, i: usize) -> RingValue {
        let ring = self.tag();
        let mut num = RingValue::one(ring);
        let mut den = BigInt::one();
        for j in 0..i {
            let factor = self - &RingValue::from_int(ring, j);
            num = &num * &factor;
            den *= BigInt::from(j + 1);
            // keep integer intermediates small; the running quotient is
            // binom(a, j+1) and therefore integral
            if let RingValue::Int(n) = &num {
                num = RingValue::Int(n / &den);
                den = BigInt::one();
            }
        }
        num.div_int(&den).expect("generalized binomial is integral")
    }

    /// Multiplicative inverse of a unit.
    pub fn invert(&self) -> Result<RingValue> {
        match self {
            RingValue::Int(n) if n.abs().is_one() => Ok(self.clone()),
            RingValue::Rat(q) if !q.is_zero() => Ok(RingValue::Rat(q.recip())),
            RingValue::Poly(p) if p.is_constant() && !p.is_zero() => {
                Ok(RingValue::Poly(Poly::constant(p.coeff(0).recip())))
            }
            _ => Err(Error::NotAUnit(self.to_string())),
        }
    }

    /// Promote an integer to the rationals; other values are unchanged.
    pub fn to_rat(&self) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Rat(BigRational::from_integer(n.clone())),
            other => other.clone(),
        }
    }

    /// Demote an integral rational back to `Int`.
    pub fn to_int(&self) -> Result<RingValue> {
        match self {
            RingValue::Int(_) => Ok(self.clone()),
            RingValue::Rat(q) if q.is_integer() => Ok(RingValue::Int(q.to_integer())),
            RingValue::Rat(q) => Err(Error::IntegralityViolation(q.to_string())),
            RingValue::Poly(_) => Err(Error::UnsupportedRing { op: "to_int", ring: RingTag::PolyX }),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingValue::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            RingValue::Int(n) => Some(BigRational::from_integer(n.clone())),
            RingValue::Rat(q) => Some(q.clone()),
            RingValue::Poly(p) if p.is_constant() => Some(p.coeff(0)),
            RingValue::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            RingValue::Poly(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(n) => write!(f, "{n}"),
            RingValue::Rat(q) => write!(f, "{q}"),
            RingValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

// Operator impls panic on mixed rings. Sequence-level code checks the ring
// once up front and then uses these in inner loops.

impl Add for &RingValue {
    type Output = RingValue;
    fn add(self, rhs: &RingValue) -> RingValue {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a + b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a + b),
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a + b),
            (a, b) => panic!("mixed rings: {} and {}", a.tag(), b.tag()),
        }
    }
}

impl AddAssign<&RingValue> for RingValue {
    fn add_assign(&mut self, rhs: &RingValue) {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => *a += b,
            (RingValue::Rat(a), RingValue::Rat(b)) => *a += b,
            (this, b) => *this = &*this + b,
        }
    }
}

impl Sub for &RingValue {
    type Output = RingValue;
    fn sub(self, rhs: &RingValue) -> RingValue {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a - b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a - b),
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a - b),
            (a, b) => panic!("mixed rings: {} and {}", a.tag(), b.tag()),
        }
    }
}

impl Mul for &RingValue {
    type Output = RingValue;
    fn mul(self, rhs: &RingValue) -> RingValue {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a * b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a * b),
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a * b),
            (a, b) => panic!("mixed rings: {} and {}", a.tag(), b.tag()),
        }
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        match self {
            RingValue::Int(a) => RingValue::Int(-a),
            RingValue::Rat(a) => RingValue::Rat(-a),
            RingValue::Poly(a) => RingValue::Poly(-a),
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
