//! Decimal-string encodings for exact numbers. Floats never appear in output.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{Integer, Rational};
use crate::{Error, Result};

pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_integer(s: &str) -> Result<Integer> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s)?)),
        Some((n, d)) => {
            let d = parse_integer(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(parse_integer(n)?, d))
        }
    }
}

/// Serde adapter storing an `Integer` as a decimal string.
pub mod integer_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Integer, D::Error> {
        let s = String::deserialize(d)?;
        parse_integer(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a `Rational` as "p/q" (or "p").
pub mod rational_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
