//! Exact numbers: big integers and rationals, the field Q(q) with q² = q − 1,
//! and Laurent polynomials over them.

mod combinat;
mod cyclotomic;
mod laurent;
mod ring;
pub mod serial;

pub use combinat::{binom_safe, factorial, factorial_i, inv_factorial, pochhammer};
pub use cyclotomic::Cyclotomic;
pub use laurent::{JsonCoeff, LaurentPoly, Var};
pub use ring::{int_to_rat, rat, rat_to_int, ExactDiv, Field, Integer, Rational, Ring};

use crate::{Error, Result};

/// σ(u) = u − u⁻¹.
pub fn sigma<R: Ring>(u: &R) -> Result<R> {
    let inv = u.try_inv().ok_or_else(|| Error::NotInvertible(format!("{u:?}")))?;
    Ok(u.clone() - inv)
}

/// α(u) = σ(qu)·σ(qū), with q a unit of the ring.
pub fn alpha_with<R: Ring>(q: &R, u: &R) -> Result<R> {
    let ubar = u.try_inv().ok_or_else(|| Error::NotInvertible(format!("{u:?}")))?;
    Ok(sigma(&(q.clone() * u.clone()))? * sigma(&(q.clone() * ubar))?)
}

/// α at the sixth-root specialization q + q̄ = 1.
pub fn alpha(u: &Cyclotomic) -> Result<Cyclotomic> {
    alpha_with(&Cyclotomic::q(), u)
}
