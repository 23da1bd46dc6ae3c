use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{rat, Field, Integer, Rational, Ring};
use super::serial::{parse_rational, rational_string};
use crate::{Error, Result};

/// Element a + b·q of Q(q), where q is a primitive sixth root of unity: q² = q − 1,
/// equivalently q + q̄ = 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclotomic {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclotomic { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyclotomic::new(rat(a, 1), rat(b, 1))
    }

    pub fn q() -> Self {
        Cyclotomic::from_ints(0, 1)
    }

    /// q̄ = q⁻¹ = 1 − q.
    pub fn qbar() -> Self {
        Cyclotomic::from_ints(1, -1)
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic::new(r, Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugation (q ↦ q̄): a + bq ↦ (a + b) − bq.
    pub fn conj(&self) -> Self {
        Cyclotomic::new(&self.a + &self.b, -&self.b)
    }

    /// a² + ab + b², the product of an element with its conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Cyclotomic::new(c.a / &n, c.b / n))
    }

    /// The integer value, if this is a rational integer.
    pub fn to_integer(&self) -> Option<Integer> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::rational(r)
    }
}

impl From<Integer> for Cyclotomic {
    fn from(n: Integer) -> Self {
        Cyclotomic::rational(Rational::from_integer(n))
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_ints(n, 0)
    }
}

fn mul_parts(x: &Cyclotomic, y: &Cyclotomic) -> Cyclotomic {
    // (a + bq)(c + dq) = ac + (ad + bc)q + bd(q − 1)
    let bd = &x.b * &y.b;
    Cyclotomic::new(&x.a * &y.a - &bd, &x.a * &y.b + &x.b * &y.a + bd)
}

macro_rules! cyc_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: &'a Cyclotomic) -> Cyclotomic {
                $body(self, o)
            }
        }
    };
}

cyc_binop!(Add, add, |x: &Cyclotomic, y: &Cyclotomic| Cyclotomic::new(&x.a + &y.a, &x.b + &y.b));
cyc_binop!(Sub, sub, |x: &Cyclotomic, y: &Cyclotomic| Cyclotomic::new(&x.a - &y.a, &x.b - &y.b));
cyc_binop!(Mul, mul, mul_parts);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-self.a, -self.b)
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_ints(1, 0)
    }
}

impl Ring for Cyclotomic {
    fn from_int(n: i64) -> Self {
        Cyclotomic::from_ints(n, 0)
    }
    fn try_inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

impl Field for Cyclotomic {}

impl super::ring::ExactDiv for Cyclotomic {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = rational_string(&self.a);
        if self.b.is_zero() {
            return write!(f, "{a}");
        }
        let bq = if self.b.is_one() {
            "q".to_string()
        } else if (-&self.b).is_one() {
            "-q".to_string()
        } else {
            format!("{}q", rational_string(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{bq}")
        } else if let Some(rest) = bq.strip_prefix('-') {
            write!(f, "{a} - {rest}")
        } else {
            write!(f, "{a} + {bq}")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    a: String,
    b: String,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr { a: rational_string(&self.a), b: rational_string(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CyclotomicRepr::deserialize(d)?;
        let a = parse_rational(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&r.b).map_err(serde::de::Error::custom)?;
        Ok(Cyclotomic::new(a, b))
    }
}
