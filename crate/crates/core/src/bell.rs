//! Partial Bell polynomials evaluated at a given argument sequence.
//!
//! Ordinary values come from Cauchy powers: `B0(n, k)` is the coefficient of
//! `z^n` in `(x_1 z + x_2 z^2 + ...)^k`. Exponential values are derived from
//! them through `B(n, k)(x_1, x_2, ...) = n!/k! * B0(n, k)(x_1/1!, x_2/2!, ...)`.
//!
//! Tables are indexed `0 <= k <= n <= max_n`; entries with `k > n` are zero,
//! `B(0, 0) = 1` and `B(n, 0) = 0` for `n >= 1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{factorial, RingTag, RingValue};
use crate::series::{cauchy_mul, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    Ordinary,
    Exponential,
}

/// Triangle of partial Bell values `B(n, k)` for `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellTable {
    arg: Seq,
    kind: BellKind,
    rows: Vec<Vec<RingValue>>,
}

impl BellTable {
    /// Ordinary partial Bell values of `arg` up to `n = max_n`.
    ///
    /// Needs `arg.len() >= max_n`.
    pub fn ordinary(arg: &Seq, max_n: usize) -> Result<Self> {
        if arg.len() < max_n {
            return Err(Error::InsufficientInput { needed: max_n, available: arg.len() });
        }
        let ring = arg.ring();
        let mut xs = vec![RingValue::zero(ring)];
        xs.extend(arg.terms()[..max_n].iter().cloned());
        let gen = Seq::new(ring, xs)?;

        let mut rows: Vec<Vec<RingValue>> = (0..=max_n).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut power = Seq::identity(ring, max_n + 1);
        for k in 0..=max_n {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(power.term(n + 1).clone());
            }
            if k < max_n {
                power = cauchy_mul(&power, &gen)?;
            }
        }
        Ok(BellTable { arg: arg.truncate(max_n.max(1)), kind: BellKind::Ordinary, rows })
    }

    /// Exponential partial Bell values of `arg` up to `n = max_n`.
    ///
    /// Integer arguments are handled over the rationals and converted back;
    /// exponential Bell values of integers are integers.
    pub fn exponential(arg: &Seq, max_n: usize) -> Result<Self> {
        let ring = arg.ring();
        let work = arg.to_rat();
        let scaled = Seq::tabulate(work.ring(), work.len(), |m| {
            work.term(m).div_int(&factorial(m)).expect("field division")
        })?;
        let ordinary = BellTable::ordinary(&scaled, max_n)?;
        let mut rows = Vec::with_capacity(max_n + 1);
        for (n, row) in ordinary.rows.into_iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (k, v) in row.into_iter().enumerate() {
                let w = v.mul_rational(&BigRational::new(factorial(n), factorial(k)))?;
                out.push(if ring == RingTag::Int { w.to_int()? } else { w });
            }
            rows.push(out);
        }
        Ok(BellTable { arg: arg.truncate(max_n.max(1)), kind: BellKind::Exponential, rows })
    }

    pub fn kind(&self) -> BellKind {
        self.kind
    }

    pub fn arg(&self) -> &Seq {
        &self.arg
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `B(n, k)`; zero for `k > n`. Panics if `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> RingValue {
        self.rows[n].get(k).cloned().unwrap_or_else(|| RingValue::zero(self.arg.ring()))
    }

    /// `B(n, 0), ..., B(n, n)`.
    pub fn row(&self, n: usize) -> &[RingValue] {
        &self.rows[n]
    }

    /// Complete Bell value `sum_k B(n, k)`.
    pub fn complete(&self, n: usize) -> RingValue {
        let mut acc = RingValue::zero(self.arg.ring());
        for v in &self.rows[n] {
            acc += v;
        }
        acc
    }
}

pub fn partial_ordinary_bell(x: &Seq, n: usize, k: usize) -> Result<RingValue> {
    if k > n {
        return Ok(RingValue::zero(x.ring()));
    }
    Ok(BellTable::ordinary(x, n)?.get(n, k))
}

pub fn partial_exponential_bell(x: &Seq, n: usize, k: usize) -> Result<RingValue> {
    if k > n {
        return Ok(RingValue::zero(x.ring()));
    }
    Ok(BellTable::exponential(x, n)?.get(n, k))
}

pub fn complete_ordinary_bell(x: &Seq, n: usize) -> Result<RingValue> {
    Ok(BellTable::ordinary(x, n)?.complete(n))
}

/// `x_n = sum_{h=1}^{n} (-1)^{h-1} (h-1)! B(n, h)(y_1, ..., y_{n-h+1})`.
pub fn bell_inversion_forward(y: &Seq) -> Result<Seq> {
    let n_max = y.len();
    let table = BellTable::exponential(y, n_max)?;
    let terms = (1..=n_max)
        .map(|n| {
            let mut acc = RingValue::zero(y.ring());
            for h in 1..=n {
                let w = table.get(n, h).mul_int(&factorial(h - 1));
                if h % 2 == 1 {
                    acc += &w;
                } else {
                    acc = &acc - &w;
                }
            }
            acc
        })
        .collect();
    Seq::new(y.ring(), terms)
}

/// `y_n = sum_{h=1}^{n} B(n, h)(x_1, ..., x_{n-h+1})`.
pub fn bell_inversion_backward(x: &Seq) -> Result<Seq> {
    let n_max = x.len();
    let table = BellTable::exponential(x, n_max)?;
    Seq::new(x.ring(), (1..=n_max).map(|n| table.complete(n)).collect())
}

/// Sum of the signed, weighted partial ordinary Bell values
/// `sum_{h=1}^{n} (-1)^{h-1}/h * B0(n, h)(u_2, u_3, ...)`,
/// i.e. the coefficient of `t^n` in `log(u_1 + u_2 t + ...)` when `u_1 = 1`.
pub fn log_coefficient_from_bell(table: &BellTable, n: usize) -> Result<RingValue> {
    debug_assert_eq!(table.kind(), BellKind::Ordinary);
    let ring = table.arg().ring();
    let mut acc = RingValue::zero(ring);
    for h in 1..=n {
        let w = table.get(n, h).div_int(&BigInt::from(h))?;
        if h % 2 == 1 {
            acc += &w;
        } else {
            acc = &acc - &w;
        }
    }
    Ok(acc)
}
