use super::Matrix;
use crate::arith::{ExactDiv, Field, Ring};
use crate::{Error, Result};

fn check_square<R: Ring>(m: &Matrix<R>) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NonSquare(m.rows(), m.cols()))
    }
}

/// Gaussian elimination over a field, pivoting on the first nonzero entry.
pub fn det_field<F: Field>(m: &Matrix<F>) -> Result<F> {
    check_square(m)?;
    let n = m.rows();
    let mut a = m.clone();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return Ok(F::zero());
        };
        if p != k {
            a.swap_rows(p, k);
            det = -det;
        }
        let pivot = a[(k, k)].clone();
        let pinv = pivot.inv().expect("pivot is nonzero");
        det = det * pivot;
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() * pinv.clone();
            for j in k + 1..n {
                let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                a[(i, j)] = v;
            }
        }
    }
    Ok(det)
}

/// Fraction-free Bareiss elimination; every division is exact in the ring.
pub fn det_bareiss<R: ExactDiv>(m: &Matrix<R>) -> Result<R> {
    check_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut sign = R::one();
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return Ok(R::zero());
        };
        if p != k {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num.div_exact(&prev).expect("Bareiss division is exact in an integral domain");
            }
            a[(i, k)] = R::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

/// Laplace expansion along the first row. Exponential; used as an oracle.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R> {
    check_square(m)?;
    Ok(cofactor(m))
}

fn cofactor<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.rows();
    match n {
        0 => R::one(),
        1 => m[(0, 0)].clone(),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[(0, j)].is_zero() {
                    continue;
                }
                let t = m[(0, j)].clone() * cofactor(&m.minor(0, j));
                acc = if j % 2 == 0 { acc + t } else { acc - t };
            }
            acc
        }
    }
}
