//! Text encodings of sequences.
//!
//! * b-file: one `<index> <value>` line per term, 1-indexed.
//! * csv: header `n,value`, then one row per term.
//! * json: an array; integers and rationals are strings (`"-24"`, `"3/2"`),
//!   polynomials are arrays of coefficient strings, lowest degree first.
//!
//! Polynomials render as `[c0,c1,...]` in the b-file and csv encodings.
//! Plain input is whitespace- or comma-separated values.

use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use crate::ring::{Poly, RingTag, RingValue};
use crate::series::Seq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Bfile,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Plain,
    Bfile,
    Csv,
    Json,
}

impl From<OutputFormat> for InputFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Bfile => InputFormat::Bfile,
            OutputFormat::Csv => InputFormat::Csv,
            OutputFormat::Json => InputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Int,
    Rat,
    Polyx,
}

impl From<RingArg> for RingTag {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Int => RingTag::Int,
            RingArg::Rat => RingTag::Rat,
            RingArg::Polyx => RingTag::PolyX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn value_json(v: &RingValue) -> Value {
    match v {
        RingValue::Poly(p) => Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect()),
        other => Value::String(other.to_string()),
    }
}

pub fn format_values(values: &[RingValue], format: OutputFormat) -> String {
    match format {
        OutputFormat::Bfile => {
            let mut out = String::new();
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{} {}\n", i + 1, v));
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["n", "value"]).expect("in-memory write");
            for (i, v) in values.iter().enumerate() {
                w.write_record([(i + 1).to_string(), v.to_string()]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        OutputFormat::Json => {
            let arr = Value::Array(values.iter().map(value_json).collect());
            let mut s = serde_json::to_string(&arr).expect("json");
            s.push('\n');
            s
        }
    }
}

pub fn format_seq(seq: &Seq, format: OutputFormat) -> String {
    format_values(seq.terms(), format)
}

fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ParseError(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s.trim()).map_err(|_| bad())?)),
    }
}

/// Parse one value in `ring`. Polynomials are `[c0,c1,...]` (commas or
/// spaces between coefficients); a bare rational is a constant polynomial.
pub fn parse_value(token: &str, ring: RingTag) -> Result<RingValue, ParseError> {
    let token = token.trim();
    match ring {
        RingTag::Int => BigInt::from_str(token)
            .map(RingValue::Int)
            .map_err(|_| ParseError(format!("invalid integer {token:?}"))),
        RingTag::Rat => parse_rational(token).map(RingValue::Rat),
        RingTag::PolyX => {
            if let Some(inner) = token.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| ParseError(format!("unterminated polynomial {token:?}")))?;
                let coeffs = inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(parse_rational)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RingValue::Poly(Poly::new(coeffs)))
            } else {
                parse_rational(token).map(|q| RingValue::Poly(Poly::constant(q)))
            }
        }
    }
}

/// Split plain input into value tokens, keeping `[...]` groups intact.
fn plain_tokens(text: &str) -> Result<Vec<String>, ParseError> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '[' => {
                if depth > 0 {
                    return Err(ParseError("nested brackets are not allowed".into()));
                }
                depth = 1;
                cur.push(ch);
            }
            ']' => {
                if depth == 0 {
                    return Err(ParseError("unbalanced ']'".into()));
                }
                depth = 0;
                cur.push(ch);
            }
            c if depth == 0 && (c.is_whitespace() || c == ',') => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if depth > 0 {
        return Err(ParseError("unterminated '['".into()));
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    Ok(tokens)
}

fn check_index(found: &str, expected: usize) -> Result<(), ParseError> {
    match found.trim().parse::<usize>() {
        Ok(i) if i == expected => Ok(()),
        _ => Err(ParseError(format!("expected index {expected}, found {found:?}"))),
    }
}

fn json_value(v: &Value, ring: RingTag) -> Result<RingValue, ParseError> {
    match v {
        Value::String(s) => parse_value(s, ring),
        Value::Number(n) => parse_value(&n.to_string(), ring),
        Value::Array(items) if ring == RingTag::PolyX => {
            let coeffs = items
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => parse_rational(&n.to_string()),
                    other => Err(ParseError(format!("invalid coefficient {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RingValue::Poly(Poly::new(coeffs)))
        }
        other => Err(ParseError(format!("invalid {ring} value {other}"))),
    }
}

/// Parse a sequence in the given encoding. At least one term is required.
pub fn parse_seq(text: &str, ring: RingTag, format: InputFormat) -> Result<Seq, ParseError> {
    let values: Vec<RingValue> = match format {
        InputFormat::Plain => plain_tokens(text)?.iter().map(|t| parse_value(t, ring)).collect::<Result<_, _>>()?,
        InputFormat::Bfile => {
            let mut values = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                let (idx, value) = line
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| ParseError(format!("malformed b-file line {line:?}")))?;
                check_index(idx, values.len() + 1)?;
                values.push(parse_value(value, ring)?);
            }
            values
        }
        InputFormat::Csv => {
            let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
            let mut values = Vec::new();
            for record in reader.records() {
                let record = record.map_err(|e| ParseError(format!("csv: {e}")))?;
                if record.len() != 2 {
                    return Err(ParseError(format!("expected 2 csv columns, found {}", record.len())));
                }
                check_index(&record[0], values.len() + 1)?;
                values.push(parse_value(&record[1], ring)?);
            }
            values
        }
        InputFormat::Json => {
            let v: Value = serde_json::from_str(text).map_err(|e| ParseError(format!("json: {e}")))?;
            let items = v.as_array().ok_or_else(|| ParseError("json input must be an array".into()))?;
            items.iter().map(|item| json_value(item, ring)).collect::<Result<_, _>>()?
        }
    };
    if values.is_empty() {
        return Err(ParseError("empty sequence".into()));
    }
    Seq::new(ring, values).map_err(|e| ParseError(e.to_string()))
}
