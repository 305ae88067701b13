//! D'Arcais polynomials, their partition specializations and the Ramanujan
//! tau function.
//!
//! `phi_n(x)` is the coefficient of `t^{n-1}` in `prod_k (1 - t^k)^{-x}`, so
//! `phi_n(1)` counts partitions of `n - 1`, `phi_n(-1)` gives the pentagonal
//! signs and `phi_n(-24) = tau(n)`. Three independent constructions of the
//! polynomials are provided: the Euler product, partial ordinary Bell values
//! of `sigma(m)/m`, and the exponential of `x sum sigma(k)/k t^k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bell::BellTable;
use crate::error::{Error, Result};
use crate::phi::phi_minus;
use crate::ring::{factorial, Poly, RingTag, RingValue};
use crate::series::{series_exp, Seq, Series};

/// Sum of divisors `sigma(m)`.
pub fn sigma(m: u64) -> BigInt {
    assert!(m >= 1, "sigma is defined for positive integers");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            total += d;
            let e = m / d;
            if e != d {
                total += e;
            }
        }
        d += 1;
    }
    total
}

/// `sigma(1), ..., sigma(n_terms)` as an integer sequence.
pub fn sigma_sequence(n_terms: usize) -> Result<Seq> {
    positive(n_terms)?;
    Seq::tabulate(RingTag::Int, n_terms, |m| RingValue::Int(sigma(m as u64)))
}

/// The `n`-th D'Arcais polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DArcaisPoly {
    pub n: usize,
    pub poly: Poly,
}

impl DArcaisPoly {
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.poly.eval(x)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// Coefficients of `(n-1)! phi_n`, the D'Arcais numbers of row `n - 1`.
    pub fn darcais_numbers(&self) -> Result<Vec<BigInt>> {
        let scale = BigRational::from_integer(factorial(self.n - 1));
        self.poly
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * &scale;
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::IntegralityViolation(v.to_string()))
                }
            })
            .collect()
    }
}

fn positive(n_terms: usize) -> Result<()> {
    if n_terms == 0 {
        Err(Error::InvalidArgument("number of terms must be positive".into()))
    } else {
        Ok(())
    }
}

fn wrap(seq: Seq) -> Vec<DArcaisPoly> {
    seq.into_terms()
        .into_iter()
        .enumerate()
        .map(|(i, v)| match v {
            RingValue::Poly(poly) => DArcaisPoly { n: i + 1, poly },
            other => unreachable!("expected a polynomial, found {other}"),
        })
        .collect()
}

/// `phi_1, ..., phi_N` from the truncated product `prod_k (1 - t^k)^{-x}`.
pub fn darcais_product(n_terms: usize) -> Result<Vec<DArcaisPoly>> {
    positive(n_terms)?;
    let exps = Seq::constant(-&RingValue::x(), (n_terms - 1).max(1));
    Ok(wrap(phi_minus(&exps, n_terms)?))
}

/// `phi_{n+1}(x) = sum_{h=1}^{n} B0(n, h)(sigma(1)/1, sigma(2)/2, ...) x^h / h!`.
pub fn darcais_bell(n_terms: usize) -> Result<Vec<DArcaisPoly>> {
    positive(n_terms)?;
    let n_max = n_terms - 1;
    let weights = Seq::tabulate(RingTag::Rat, n_max.max(1), |m| {
        RingValue::Rat(BigRational::new(sigma(m as u64), BigInt::from(m)))
    })?;
    let table = BellTable::ordinary(&weights, n_max)?;
    let mut out = vec![DArcaisPoly { n: 1, poly: Poly::one() }];
    for n in 1..=n_max {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (h, c) in coeffs.iter_mut().enumerate().skip(1) {
            let b = table.get(n, h).as_rational().expect("rational table");
            *c = b / BigRational::from_integer(factorial(h));
        }
        out.push(DArcaisPoly { n: n + 1, poly: Poly::new(coeffs) });
    }
    Ok(out)
}

/// `sum_h phi_{h+1}(x) t^h = exp(x sum_k sigma(k)/k t^k)`.
pub fn darcais_exp(n_terms: usize) -> Result<Vec<DArcaisPoly>> {
    positive(n_terms)?;
    let w = Seq::tabulate(RingTag::PolyX, n_terms, |i| {
        let k = i - 1;
        if k == 0 {
            RingValue::zero(RingTag::PolyX)
        } else {
            RingValue::Poly(Poly::x().scale(&BigRational::new(sigma(k as u64), BigInt::from(k))))
        }
    })?;
    Ok(wrap(series_exp(&Series::new(w))?.into_seq()))
}

/// `phi_n(c)` for `n = 1..=N`, computed as `prod_k (1 - t^k)^{-c}` over the
/// integers. Evaluation at `x = c` is a ring map, so this equals evaluating
/// the polynomials one by one.
pub fn darcais_at(c: i64, n_terms: usize) -> Result<Seq> {
    positive(n_terms)?;
    let exps = Seq::constant(RingValue::from_int(RingTag::Int, -c), (n_terms - 1).max(1));
    phi_minus(&exps, n_terms)
}

/// Partition numbers `phi_n(1) = p(n - 1)`: `(1, 1, 2, 3, 5, 7, ...)`.
pub fn partition_numbers(n_terms: usize) -> Result<Seq> {
    darcais_at(1, n_terms)
}

/// `phi_n(-1)`, the coefficients of `prod_k (1 - t^k)` (OEIS A010815).
pub fn a010815(n_terms: usize) -> Result<Seq> {
    darcais_at(-1, n_terms)
}

/// Partition counts `p(0), ..., p(N-1)` by Euler's pentagonal-number
/// recurrence, independent of any product expansion.
pub fn partition_counts_pentagonal(n_terms: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_terms);
    for i in 0..n_terms {
        if i == 0 {
            p.push(BigInt::one());
            continue;
        }
        let mut sum = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let mut term = p[i - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p.push(sum);
    }
    p
}

/// `tau(n)` together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauValue {
    pub n: usize,
    pub value: BigInt,
}

fn tau_of(phi: &DArcaisPoly) -> Result<TauValue> {
    let v = phi.eval_int(-24);
    if !v.is_integer() {
        return Err(Error::IntegralityViolation(v.to_string()));
    }
    Ok(TauValue { n: phi.n, value: v.to_integer() })
}

/// Ramanujan's `tau(n) = phi_n(-24)`.
pub fn ramanujan_tau(n: usize) -> Result<TauValue> {
    positive(n)?;
    let polys = darcais_product(n)?;
    tau_of(&polys[n - 1])
}

/// `tau(1), ..., tau(N)`, evaluating each D'Arcais polynomial at `-24`.
pub fn tau_values(n_terms: usize) -> Result<Vec<TauValue>> {
    darcais_product(n_terms)?.iter().map(tau_of).collect()
}

/// `phi_{mn}(x) - phi_m(x) phi_n(x)` and its value at `x = -24`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityResidual {
    pub m: usize,
    pub n: usize,
    pub residual: Poly,
    pub value_at_minus_24: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub bound: usize,
    pub entries: Vec<MultiplicativityResidual>,
}

impl MultiplicativityReport {
    pub fn failures(&self) -> impl Iterator<Item = &MultiplicativityResidual> {
        self.entries.iter().filter(|e| !e.value_at_minus_24.is_zero())
    }

    pub fn passes(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Every coprime pair `m <= n` with `mn <= bound`, with the residual
/// polynomial evaluated at `-24`. Only the root at `-24` is expected; the
/// residual polynomial itself is generally nonzero.
pub fn tau_multiplicativity_experiment(bound: usize) -> Result<MultiplicativityReport> {
    if bound < 2 {
        return Err(Error::InvalidArgument("bound must be at least 2".into()));
    }
    let polys = darcais_product(bound)?;
    let minus_24 = BigRational::from_integer((-24).into());
    let mut entries = Vec::new();
    for m in 1..=bound {
        for n in m..=bound / m {
            if m.gcd(&n) != 1 {
                continue;
            }
            let residual = &polys[m * n - 1].poly - &(&polys[m - 1].poly * &polys[n - 1].poly);
            let value_at_minus_24 = residual.eval(&minus_24);
            entries.push(MultiplicativityResidual { m, n, residual, value_at_minus_24 });
        }
    }
    Ok(MultiplicativityReport { bound, entries })
}
