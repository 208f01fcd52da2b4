//! Number literals in text formats.
//!
//! An integer such as `3` is valid in either mode. `p/q` is an exact literal
//! and anything with a decimal point or exponent is a float literal; the two
//! may not be mixed in one input.

use std::str::FromStr;

use affframe::{Rational, Scalar};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiteralKind {
    Integer,
    Fraction,
    Decimal,
}

/// Arithmetic an input will be processed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberMode {
    Exact,
    Float,
}

pub fn classify(token: &str) -> Result<LiteralKind, CliError> {
    let t = token.trim();
    if t.contains('/') {
        return Ok(LiteralKind::Fraction);
    }
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(LiteralKind::Integer);
    }
    if f64::from_str(t).is_ok_and(f64::is_finite) && t.bytes().any(|b| b.is_ascii_digit()) {
        return Ok(LiteralKind::Decimal);
    }
    Err(CliError::Parse(format!("not a number: {token:?}")))
}

/// The mode an all-literal input implies.
pub fn detect_mode<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<NumberMode, CliError> {
    let (mut fraction, mut decimal) = (false, false);
    for t in tokens {
        match classify(t)? {
            LiteralKind::Integer => {}
            LiteralKind::Fraction => fraction = true,
            LiteralKind::Decimal => decimal = true,
        }
    }
    match (fraction, decimal) {
        (true, true) => Err(CliError::Parse(
            "rational and decimal literals cannot be mixed".into(),
        )),
        (_, true) => Ok(NumberMode::Float),
        _ => Ok(NumberMode::Exact),
    }
}

/// A scalar that can be read from and written to text formats.
pub trait Literal: Scalar {
    const MODE: NumberMode;

    fn parse_literal(token: &str) -> Result<Self, CliError>;

    /// Shortest text that parses back to the same value in the same mode.
    fn render(&self) -> String;

    fn to_json(&self) -> serde_json::Value;

    fn from_json(value: &serde_json::Value) -> Result<Self, CliError>;
}

impl Literal for Rational {
    const MODE: NumberMode = NumberMode::Exact;

    /// Also accepts decimal literals, converted exactly.
    fn parse_literal(token: &str) -> Result<Self, CliError> {
        let t = token.trim();
        let bad = || CliError::Parse(format!("not a number: {token:?}"));
        match classify(t)? {
            LiteralKind::Integer => BigInt::from_str(t.trim_start_matches('+'))
                .map(Rational::from_integer)
                .map_err(|_| bad()),
            LiteralKind::Fraction => {
                let (p, q) = t.split_once('/').ok_or_else(bad)?;
                let p = BigInt::from_str(p.trim().trim_start_matches('+')).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim().trim_start_matches('+')).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(CliError::Parse(format!("zero denominator: {token:?}")));
                }
                Ok(Rational::new(p, q))
            }
            LiteralKind::Decimal => exact_decimal(t).ok_or_else(bad),
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.render())
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, CliError> {
        match value {
            serde_json::Value::String(s) => match classify(s)? {
                LiteralKind::Decimal => Err(CliError::Parse(format!("expected a rational, got {s:?}"))),
                _ => Self::parse_literal(s),
            },
            _ => Err(CliError::Parse(format!("expected a rational string, got {value}"))),
        }
    }
}

impl Literal for f64 {
    const MODE: NumberMode = NumberMode::Float;

    fn parse_literal(token: &str) -> Result<Self, CliError> {
        let t = token.trim();
        match classify(t)? {
            LiteralKind::Fraction => {
                let r = Rational::parse_literal(t)?;
                Ok(Scalar::to_f64(&r))
            }
            _ => f64::from_str(t).map_err(|_| CliError::Parse(format!("not a number: {token:?}"))),
        }
    }

    fn render(&self) -> String {
        format!("{self:?}")
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Number::from_f64(*self)
            .map(serde_json::Value::Number)
            .unwrap_or(serde_json::Value::Null)
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, CliError> {
        value
            .as_f64()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::Parse(format!("expected a finite number, got {value}")))
    }
}

/// Largest power of ten an exact decimal conversion will expand.
const MAX_DECIMAL_SHIFT: u32 = 1000;

/// `[-]digits[.digits][e[-]digits]` as an exact fraction.
fn exact_decimal(t: &str) -> Option<Rational> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], i32::from_str(&t[i + 1..]).ok()?),
        None => (t, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = BigInt::from_str(&format!("{int}{frac}")).ok()?;
    let shift = exp.checked_sub(i32::try_from(frac.len()).ok()?)?;
    if shift.unsigned_abs() > MAX_DECIMAL_SHIFT {
        return None;
    }
    let ten = BigInt::from(10u32);
    let pow = num_traits::pow(ten, shift.unsigned_abs() as usize);
    let mut value = if shift >= 0 {
        Rational::from_integer(digits * pow)
    } else {
        Rational::new(digits, pow)
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Whether a JSON value holds an exact literal (a string) rather than a float.
pub fn json_mode(value: &serde_json::Value) -> Option<NumberMode> {
    match value {
        serde_json::Value::String(_) => Some(NumberMode::Exact),
        serde_json::Value::Number(_) => Some(NumberMode::Float),
        _ => None,
    }
}
