use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Commutative ring with unity. Arithmetic goes through the owned operators,
/// so generic code clones where it needs to keep an operand.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
    /// Inverse when the element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;

    fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a unit.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.powu(e as u32))
        } else {
            self.try_inv().map(|inv| inv.powu((-e) as u32))
        }
    }
}

/// Every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            self.try_inv()
        }
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Integral domain with exact division (quotient only when the remainder vanishes).
pub trait ExactDiv: Ring {
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Ring for Integer {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl ExactDiv for Integer {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Rational {}

impl ExactDiv for Rational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &Integer) -> Rational {
    BigRational::from_integer(n.clone())
}

/// The integer value of a rational, if its denominator is 1.
pub fn rat_to_int(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.to_integer())
}
