use super::Matrix;
use crate::arith::{Field, Ring};
use crate::{Error, Result};

/// Skew-symmetric matrix given by its strictly upper triangle a_{i,j}, i < j.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<R> {
    n: usize,
    upper: Vec<R>,
}

impl<R: Ring> SkewMatrix<R> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { n, upper }
    }

    /// Reads the upper triangle of a square matrix after checking skew symmetry.
    pub fn from_matrix(m: &Matrix<R>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NonSquare(m.rows(), m.cols()));
        }
        let n = m.rows();
        for i in 0..n {
            if !m[(i, i)].is_zero() {
                return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at {i}")));
            }
            for j in i + 1..n {
                if m[(i, j)].clone() + m[(j, i)].clone() != R::zero() {
                    return Err(Error::InvalidMatrix(format!("not skew at ({i},{j})")));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| m[(i, j)].clone()))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -self.upper[self.slot(j, i)].clone(),
            Equal => R::zero(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    fn check_even(&self) -> Result<()> {
        if self.n.is_multiple_of(2) {
            Ok(())
        } else {
            Err(Error::OddOrder(self.n))
        }
    }
}

/// Pfaffian by first-row expansion up to order 8, skew elimination above.
pub fn pfaffian<F: Field>(m: &SkewMatrix<F>) -> Result<F> {
    if m.order() <= 8 {
        pfaffian_expand(m)
    } else {
        pfaffian_elim(m)
    }
}

/// Pf(A) = Σ_j (−1)^j a_{1,j} Pf(A without rows/columns 1 and j), 1-based.
pub fn pfaffian_expand<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    m.check_even()?;
    let idx: Vec<usize> = (0..m.order()).collect();
    Ok(expand(m, &idx))
}

fn expand<R: Ring>(m: &SkewMatrix<R>, idx: &[usize]) -> R {
    if idx.is_empty() {
        return R::one();
    }
    let first = idx[0];
    let mut acc = R::zero();
    for k in 1..idx.len() {
        let a = m.get(first, idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&v| v != idx[k]).collect();
        let t = a * expand(m, &rest);
        acc = if k % 2 == 1 { acc + t } else { acc - t };
    }
    acc
}

/// Signed sum over perfect matchings, the sign being the parity of crossings.
pub fn pfaffian_matching<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    m.check_even()?;
    let mut total = R::zero();
    let mut pairs = Vec::new();
    let mut used = vec![false; m.order()];
    matchings(m.order(), &mut used, &mut pairs, &mut |ps: &[(usize, usize)]| {
        let crossings = ps
            .iter()
            .enumerate()
            .flat_map(|(k, &(a, b))| ps[k + 1..].iter().map(move |&(c, d)| (a, b, c, d)))
            .filter(|&(a, b, c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b))
            .count();
        let prod = ps.iter().fold(R::one(), |acc, &(i, j)| acc * m.get(i, j));
        total = if crossings % 2 == 0 { total.clone() + prod } else { total.clone() - prod };
    });
    Ok(total)
}

type Pair = (usize, usize);

fn matchings(n: usize, used: &mut [bool], pairs: &mut Vec<Pair>, visit: &mut dyn FnMut(&[Pair])) {
    let Some(i) = (0..n).find(|&i| !used[i]) else {
        visit(pairs);
        return;
    };
    used[i] = true;
    for j in i + 1..n {
        if used[j] {
            continue;
        }
        used[j] = true;
        pairs.push((i, j));
        matchings(n, used, pairs, visit);
        pairs.pop();
        used[j] = false;
    }
    used[i] = false;
}

/// Skew Gaussian elimination: pivot on a_{k,k+1} and update the trailing block by
/// a_{ij} ← a_{ij} − (a_{k,i} a_{k+1,j} − a_{k,j} a_{k+1,i}) / a_{k,k+1}.
pub fn pfaffian_elim<F: Field>(m: &SkewMatrix<F>) -> Result<F> {
    m.check_even()?;
    let n = m.order();
    let mut a = m.to_matrix();
    let mut pf = F::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
            return Ok(F::zero());
        };
        if p != k + 1 {
            a.swap_rows(p, k + 1);
            for r in 0..n {
                let t = a[(r, p)].clone();
                a[(r, p)] = a[(r, k + 1)].clone();
                a[(r, k + 1)] = t;
            }
            pf = -pf;
        }
        let piv = a[(k, k + 1)].clone();
        let pinv = piv.inv().expect("pivot is nonzero");
        pf = pf * piv;
        for i in k + 2..n {
            for j in i + 1..n {
                let upd = (a[(k, i)].clone() * a[(k + 1, j)].clone() - a[(k, j)].clone() * a[(k + 1, i)].clone())
                    * pinv.clone();
                let v = a[(i, j)].clone() - upd;
                a[(j, i)] = -v.clone();
                a[(i, j)] = v;
            }
        }
        k += 2;
    }
    Ok(pf)
}
