//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Reduced `"num/den"` form, always with an explicit denominator.
pub fn to_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn floor_i64(r: &Rational) -> i64 {
    to_i64(&r.floor().to_integer())
}

pub fn ceil_i64(r: &Rational) -> i64 {
    to_i64(&r.ceil().to_integer())
}

pub fn to_i64(b: &BigInt) -> i64 {
    i64::try_from(b).expect("integer exceeds i64 range")
}

/// Converts an integral rational to `i64`, `None` if not an integer.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}
