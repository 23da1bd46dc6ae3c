use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use super::cyclotomic::Cyclotomic;
use super::ring::{ExactDiv, Field, Integer, Rational, Ring};
use super::serial::{parse_integer, parse_rational, rational_string};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Z,
    X,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Z => "z",
            Var::X => "x",
        })
    }
}

/// Laurent polynomial in one variable. Zero coefficients are never stored.
///
/// The variable tag only affects printing and serialization; arithmetic keeps the
/// tag of the left operand unless that operand is a constant.
#[derive(Clone, Debug)]
pub struct LaurentPoly<R> {
    var: Var,
    coeffs: BTreeMap<i64, R>,
}

impl<R: Ring> PartialEq for LaurentPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero_in(var: Var) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn constant(var: Var, c: R) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn monomial(var: Var, c: R, e: i64) -> Self {
        let mut p = Self::zero_in(var);
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    /// The variable itself.
    pub fn var(var: Var) -> Self {
        Self::monomial(var, R::one(), 1)
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut p = Self::zero_in(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn add_term(&mut self, e: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(e, s);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: i64) -> R {
        self.coeffs.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    /// Substitutes var ↦ var⁻¹.
    pub fn reflect(&self) -> Self {
        LaurentPoly { var: self.var, coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplies by var^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes var ↦ var^k for k ≠ 0.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k != 0, "stretch by zero");
        LaurentPoly { var: self.var, coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.var, self.coeffs.iter().map(|(e, a)| (*e, a.clone() * c.clone())))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.var, self.coeffs.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Evaluates at an element of a field containing the coefficients.
    pub fn eval<F>(&self, t: &F) -> Result<F>
    where
        F: Field + From<R>,
    {
        let inv =
            if self.min_exp().is_some_and(|e| e < 0) { Some(t.inv().ok_or(Error::DivisionByZero)?) } else { None };
        let mut acc = F::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                t.powu(*e as u32)
            } else {
                inv.as_ref().expect("inverse computed above").powu((-e) as u32)
            };
            acc = acc + F::from(c.clone()) * p;
        }
        Ok(acc)
    }

    fn tag_for(&self, other: &Self) -> Var {
        if self.is_constant() {
            other.var
        } else {
            self.var
        }
    }
}

impl LaurentPoly<Rational> {
    pub fn to_cyclotomic(&self) -> LaurentPoly<Cyclotomic> {
        self.map_coeffs(|c| Cyclotomic::rational(c.clone()))
    }
}

impl LaurentPoly<Integer> {
    pub fn to_rational(&self) -> LaurentPoly<Rational> {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }

    pub fn to_cyclotomic(&self) -> LaurentPoly<Cyclotomic> {
        self.map_coeffs(|c| Cyclotomic::from(c.clone()))
    }
}

impl<R: Ring> Add for LaurentPoly<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.var = self.tag_for(&o);
        for (e, c) in o.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl<R: Ring> Sub for LaurentPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for LaurentPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly { var: self.var, coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<R: Ring> Mul for LaurentPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero_in(self.tag_for(&o));
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Ring> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        Self::zero_in(Var::Z)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for LaurentPoly<R> {
    fn one() -> Self {
        Self::constant(Var::Z, R::one())
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
    fn from_int(n: i64) -> Self {
        Self::constant(Var::Z, R::from_int(n))
    }
    /// Units are the monomials with invertible coefficient.
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().expect("one term");
        Some(Self::monomial(self.var, c.try_inv()?, -e))
    }
}

impl<F: Field> ExactDiv for LaurentPoly<F> {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let (b_lo, b_hi) = (other.min_exp()?, other.max_exp()?);
        let Some(a_lo) = self.min_exp() else {
            return Some(Self::zero_in(self.var));
        };
        let lead_inv = other.coeffs[&b_hi].inv()?;
        let mut rem = self.shift(-a_lo);
        let divisor = other.shift(-b_lo);
        let d_deg = b_hi - b_lo;
        let mut quot = Self::zero_in(self.tag_for(other));
        while let Some(top) = rem.max_exp() {
            if top < d_deg {
                return None;
            }
            let c = rem.coeffs[&top].clone() * lead_inv.clone();
            let k = top - d_deg;
            rem = rem - divisor.shift(k).scale(&c);
            quot.add_term(k, c);
        }
        Some(quot.shift(a_lo - b_lo))
    }
}

/// Coefficients that have an exact JSON encoding.
pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for Integer {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str().ok_or_else(|| Error::Parse("expected a decimal string".into())).and_then(parse_integer)
    }
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(rational_string(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str().ok_or_else(|| Error::Parse("expected a rational string".into())).and_then(parse_rational)
    }
}

impl JsonCoeff for Cyclotomic {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("cyclotomic serializes")
    }
    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl<R: Ring + JsonCoeff> LaurentPoly<R> {
    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_json())).collect();
        serde_json::json!({ "var": self.var, "coeffs": coeffs })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let var: Var = serde_json::from_value(v["var"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let coeffs = v["coeffs"].as_object().ok_or_else(|| Error::Parse("missing coeffs".into()))?;
        let mut p = Self::zero_in(var);
        for (k, c) in coeffs {
            let e: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
            p.add_term(e, R::from_json(c)?);
        }
        Ok(p)
    }
}

impl<R: Ring + JsonCoeff> Serialize for LaurentPoly<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, R: Ring + JsonCoeff> Deserialize<'de> for LaurentPoly<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match *e {
                0 => write!(f, "{cs}")?,
                _ => {
                    let coef = match cs.as_str() {
                        "1" => String::new(),
                        "-1" => "-".to_string(),
                        _ => cs,
                    };
                    if *e == 1 {
                        write!(f, "{coef}{}", self.var)?
                    } else {
                        write!(f, "{coef}{}^{}", self.var, e)?
                    }
                }
            }
        }
        Ok(())
    }
}
