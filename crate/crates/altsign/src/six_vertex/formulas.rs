//! Closed determinant and Pfaffian formulas for the partition functions,
//! evaluated at numeric points only.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{GridModel, ParamSet};
use crate::arith::{alpha_with, sigma, Field, Rational};
use crate::linalg::{det_field, pfaffian, Matrix, SkewMatrix};
use crate::{Error, Result};

fn singular(what: &str) -> Error {
    Error::Singular(format!("specialization singular: {what} vanishes"))
}

fn s<F: Field>(u: F) -> Result<F> {
    sigma(&u)
}

fn inv<F: Field>(u: &F, what: &str) -> Result<F> {
    u.inv().ok_or_else(|| singular(what))
}

fn al<F: Field>(q: &F, u: F) -> Result<F> {
    alpha_with(q, &u)
}

fn pow<F: Field>(u: &F, e: i64, what: &str) -> Result<F> {
    u.powi(e).ok_or_else(|| singular(what))
}

fn check_len<F>(p: &ParamSet<F>, n: usize) -> Result<()> {
    if p.x.len() != n || p.y.len() != n {
        return Err(Error::OutOfRange(format!("need {n} x and {n} y parameters")));
    }
    Ok(())
}

/// Π_{i<j} σ(x_j/x_i)σ(y_i/y_j).
fn vandermonde<F: Field>(x: &[F], y: &[F]) -> Result<F> {
    let n = x.len();
    let mut d = F::one();
    for i in 0..n {
        for j in i + 1..n {
            d = d * s(x[j].clone() * inv(&x[i], "x_i")?)? * s(y[i].clone() * inv(&y[j], "y_j")?)?;
        }
    }
    Ok(d)
}

/// Π_{i≤j} σ(x̄_i x̄_j)σ(y_i y_j).
fn symmetric_vandermonde<F: Field>(x: &[F], y: &[F]) -> Result<F> {
    let n = x.len();
    let mut d = F::one();
    for i in 0..n {
        for j in i..n {
            let xx = inv(&(x[i].clone() * x[j].clone()), "x_i x_j")?;
            d = d * s(xx)? * s(y[i].clone() * y[j].clone())?;
        }
    }
    Ok(d)
}

/// Domain-wall partition function: σ(q²)^{n−n²} Π α(x_i/y_j) / Π_{i<j} σ(x_j/x_i)σ(y_i/y_j)
/// · det(1/α(x_i/y_j)).
pub fn z_dwbc_formula<F: Field>(p: &ParamSet<F>) -> Result<F> {
    let n = p.x.len();
    check_len(p, n)?;
    let q = &p.q;
    let nn = n as i64;
    let mut a = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(al(q, p.x[i].clone() * inv(&p.y[j], "y_j")?)?);
        }
    }
    let recip: Vec<F> = a.iter().map(|v| inv(v, "α(x_i/y_j)")).collect::<Result<_>>()?;
    let m = Matrix::from_fn(n, n, |i, j| recip[i * n + j].clone());
    let num = a.iter().fold(pow(&s(q.clone() * q.clone())?, nn - nn * nn, "σ(q²)")?, |acc, v| acc * v.clone());
    let den = inv(&vandermonde(&p.x, &p.y)?, "Π σ(x_j/x_i)σ(y_i/y_j)")?;
    Ok(num * den * det_field(&m)?)
}

/// U-turn partition function: σ(q²)^{n−2n²} Π σ(b ȳ_i)σ(q²x_i²) Π α(x_i/y_j)α(x_i y_j)
/// / (Π_{i<j} σ(x_j/x_i)σ(y_i/y_j) Π_{i≤j} σ(x̄_i x̄_j)σ(y_i y_j))
/// · det(1/α(x_i/y_j) − 1/α(x_i y_j)).
pub fn z_u_formula<F: Field>(p: &ParamSet<F>) -> Result<F> {
    let n = p.x.len();
    check_len(p, n)?;
    let (q, b) = (&p.q, &p.b);
    let nn = n as i64;
    let q2 = q.clone() * q.clone();
    let mut num = pow(&s(q2.clone())?, nn - 2 * nn * nn, "σ(q²)")?;
    for i in 0..n {
        num = num * s(b.clone() * inv(&p.y[i], "y_i")?)? * s(q2.clone() * p.x[i].clone() * p.x[i].clone())?;
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let a1 = al(q, p.x[i].clone() * inv(&p.y[j], "y_j")?)?;
            let a2 = al(q, p.x[i].clone() * p.y[j].clone())?;
            entries.push(inv(&a1, "α(x_i/y_j)")? - inv(&a2, "α(x_i y_j)")?);
            num = num * a1 * a2;
        }
    }
    let den = vandermonde(&p.x, &p.y)? * symmetric_vandermonde(&p.x, &p.y)?;
    let m = Matrix::from_fn(n, n, |i, j| entries[i * n + j].clone());
    Ok(num * inv(&den, "U-turn denominator")? * det_field(&m)?)
}

/// Off-diagonal partition function of order 2n:
/// σ(q²)^{2n−2n²} Π_{i<j} α(x_i x_j)/σ(x_j/x_i) · Pf(σ(x_j/x_i)/α(x_i x_j)).
pub fn z_o_formula<F: Field>(x: &[F], q: &F) -> Result<F> {
    let m = x.len();
    if m % 2 == 1 {
        return Err(Error::OddOrder(m));
    }
    let n = (m / 2) as i64;
    let mut num = pow(&s(q.clone() * q.clone())?, 2 * n - 2 * n * n, "σ(q²)")?;
    let mut den = F::one();
    let mut entry = vec![F::zero(); m * m];
    for i in 0..m {
        for j in i + 1..m {
            let a = al(q, x[i].clone() * x[j].clone())?;
            let sg = s(x[j].clone() * inv(&x[i], "x_i")?)?;
            entry[i * m + j] = sg.clone() * inv(&a, "α(x_i x_j)")?;
            num = num * a;
            den = den * sg;
        }
    }
    let pf = pfaffian(&SkewMatrix::from_fn(m, |i, j| entry[i * m + j].clone()))?;
    Ok(num * inv(&den, "Π σ(x_j/x_i)")? * pf)
}

/// Even half-turn partition function: σ(q²)^{n−2n²} Π α(x_i/y_j)² / Π_{i<j} (σ(x_j/x_i)σ(y_i/y_j))²
/// · det(1/α(x_i/y_j)) · det(1/σ(q y_j/x_i) + 1/σ(q x_i/y_j)).
pub fn z_h_even_formula<F: Field>(x: &[F], y: &[F], q: &F) -> Result<F> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::OutOfRange("x and y must have equal length".into()));
    }
    let nn = n as i64;
    let mut num = pow(&s(q.clone() * q.clone())?, nn - 2 * nn * nn, "σ(q²)")?;
    let mut d1 = Vec::with_capacity(n * n);
    let mut d2 = Vec::with_capacity(n * n);
    for xi in x {
        for yj in y {
            let u = xi.clone() * inv(yj, "y_j")?;
            let a = al(q, u.clone())?;
            d1.push(inv(&a, "α(x_i/y_j)")?);
            let t1 = s(q.clone() * inv(&u, "x_i/y_j")?)?;
            let t2 = s(q.clone() * u)?;
            d2.push(inv(&t1, "σ(q y_j/x_i)")? + inv(&t2, "σ(q x_i/y_j)")?);
            num = num * a.clone() * a;
        }
    }
    let v = vandermonde(x, y)?;
    let den = v.clone() * v;
    let m1 = Matrix::from_fn(n, n, |i, j| d1[i * n + j].clone());
    let m2 = Matrix::from_fn(n, n, |i, j| d2[i * n + j].clone());
    Ok(num * inv(&den, "half-turn denominator")? * det_field(&m1)? * det_field(&m2)?)
}

/// UU-turn partition function: σ(q²)^{n−4n²} Π σ(q²ȳ_i²)σ(q²x_i²) Π α(x_i y_j)²α(x_i/y_j)²
/// / (Π_{i<j} σ(x_j/x_i)σ(y_i/y_j) Π_{i≤j} σ(x̄_i x̄_j)σ(y_i y_j))²
/// · det(1/α(x_i/y_j) − 1/α(x_i y_j)) · det(M), with
/// M_ij = σ(bȳ_j)σ(cx_i)/σ(qx_i/y_j) − σ(bȳ_j)σ(cx̄_i)/σ(qx̄_iȳ_j) − σ(by_j)σ(cx_i)/σ(qx_iy_j) + σ(by_j)σ(cx̄_i)/σ(qy_j/x_i).
pub fn z_uu_formula<F: Field>(p: &ParamSet<F>) -> Result<F> {
    let n = p.x.len();
    check_len(p, n)?;
    let (q, b, c) = (&p.q, &p.b, &p.c);
    let nn = n as i64;
    let q2 = q.clone() * q.clone();
    let mut num = pow(&s(q2.clone())?, nn - 4 * nn * nn, "σ(q²)")?;
    for i in 0..n {
        let yb = inv(&p.y[i], "y_i")?;
        num = num * s(q2.clone() * yb.clone() * yb)? * s(q2.clone() * p.x[i].clone() * p.x[i].clone())?;
    }
    let mut mu = Vec::with_capacity(n * n);
    let mut muu = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (&p.x[i], &p.y[j]);
            let (xb, yb) = (inv(x, "x_i")?, inv(y, "y_j")?);
            let a1 = al(q, x.clone() * yb.clone())?;
            let a2 = al(q, x.clone() * y.clone())?;
            mu.push(inv(&a1, "α(x_i/y_j)")? - inv(&a2, "α(x_i y_j)")?);
            num = num * a1.clone() * a1 * a2.clone() * a2;
            let (sby, sbyb) = (s(b.clone() * y.clone())?, s(b.clone() * yb.clone())?);
            let (scx, scxb) = (s(c.clone() * x.clone())?, s(c.clone() * xb.clone())?);
            let d = |u: F| -> Result<F> { inv(&s(q.clone() * u)?, "σ(q·label)") };
            muu.push(
                sbyb.clone() * scx.clone() * d(x.clone() * yb.clone())?
                    - sbyb * scxb.clone() * d(xb.clone() * yb)?
                    - sby.clone() * scx * d(x.clone() * y.clone())?
                    + sby * scxb * d(y.clone() * xb)?,
            );
        }
    }
    let den = vandermonde(&p.x, &p.y)? * symmetric_vandermonde(&p.x, &p.y)?;
    let den = den.clone() * den;
    let m1 = Matrix::from_fn(n, n, |i, j| mu[i * n + j].clone());
    let m2 = Matrix::from_fn(n, n, |i, j| muu[i * n + j].clone());
    Ok(num * inv(&den, "UU-turn denominator")? * det_field(&m1)? * det_field(&m2)?)
}

/// A small-height positive rational p/r with 2 ≤ p ≤ 40 and 1 ≤ r ≤ 40.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(2..=40).into(), rng.gen_range(1..=40).into())
}

/// Random rational parameters for a model (q, b, c random too).
pub fn random_params(model: GridModel, rng: &mut ChaCha8Rng) -> ParamSet<Rational> {
    let n = model.n();
    ParamSet {
        x: (0..n).map(|_| small_rational(rng)).collect(),
        y: (0..n).map(|_| small_rational(rng)).collect(),
        q: small_rational(rng),
        b: small_rational(rng),
        c: small_rational(rng),
    }
}

/// Which closed formula to compare against its state sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaCheck {
    Dwbc,
    UTurn,
    UUTurn,
    OffDiagonal,
    HalfTurnEven,
}

impl FormulaCheck {
    pub fn name(self) -> &'static str {
        match self {
            FormulaCheck::Dwbc => "z-dwbc",
            FormulaCheck::UTurn => "z-uturn",
            FormulaCheck::UUTurn => "z-uuturn",
            FormulaCheck::OffDiagonal => "z-offdiagonal",
            FormulaCheck::HalfTurnEven => "z-halfturn-even",
        }
    }

    pub fn model(self, n: usize) -> Option<GridModel> {
        match self {
            FormulaCheck::Dwbc => Some(GridModel::Dwbc(n)),
            FormulaCheck::UTurn => Some(GridModel::UTurn(n)),
            FormulaCheck::UUTurn => Some(GridModel::UUTurn(n)),
            _ => None,
        }
    }
}

impl From<GridModel> for FormulaCheck {
    fn from(m: GridModel) -> Self {
        match m {
            GridModel::Dwbc(_) => FormulaCheck::Dwbc,
            GridModel::UTurn(_) => FormulaCheck::UTurn,
            GridModel::UUTurn(_) => FormulaCheck::UUTurn,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Cyclotomic};
    use crate::six_vertex::{z_state_sum, ParamSet};
    use rand::SeedableRng;

    #[test]
    fn dwbc_formula_at_unit_point_is_singular() {
        let p = ParamSet::ones(GridModel::Dwbc(2), Cyclotomic::q());
        assert!(matches!(z_dwbc_formula(&p), Err(Error::Singular(_))));
    }

    #[test]
    fn dwbc_n1_is_single_vertex() {
        let p = ParamSet { x: vec![rat(3, 2)], y: vec![rat(5, 7)], q: rat(4, 3), b: rat(1, 1), c: rat(1, 1) };
        assert_eq!(z_dwbc_formula(&p).unwrap(), z_state_sum(GridModel::Dwbc(1), &p).unwrap());
    }

    #[test]
    fn formulas_agree_with_state_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3 {
            let p = random_params(GridModel::Dwbc(n), &mut rng);
            assert_eq!(z_dwbc_formula(&p).unwrap(), z_state_sum(GridModel::Dwbc(n), &p).unwrap());
        }
        for n in 1..=2 {
            let p = random_params(GridModel::UTurn(n), &mut rng);
            assert_eq!(z_u_formula(&p).unwrap(), z_state_sum(GridModel::UTurn(n), &p).unwrap());
        }
        let p = random_params(GridModel::UUTurn(1), &mut rng);
        assert_eq!(z_uu_formula(&p).unwrap(), z_state_sum(GridModel::UUTurn(1), &p).unwrap());
    }
}
