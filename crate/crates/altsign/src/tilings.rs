//! Rhombus tilings of quartered hexagons through non-intersecting lattice paths:
//! the path-count matrix and its determinant, the closed product for its minors,
//! a brute-force path enumerator, and the weighted generating function.

use num_traits::{One, Zero};

use crate::arith::{binom_safe, factorial, ExactDiv, Integer, LaurentPoly, Rational, Var};
use crate::linalg::{det_bareiss, det_field, Matrix};
use crate::{Error, Result};

/// A quartered hexagon: right side 2n, top of length ℓ, and bottom protrusions
/// at the listed positions (1-based, strictly increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarteredHexagonSpec {
    pub side: usize,
    pub top: usize,
    pub protrusions: Vec<usize>,
}

impl QuarteredHexagonSpec {
    pub fn new(side: usize, top: usize, protrusions: Vec<usize>) -> Result<Self> {
        let k = protrusions.len();
        if side != 2 * k {
            return Err(Error::InvalidMatrix(format!("side {side} needs {} protrusions", side / 2)));
        }
        let increasing = protrusions.windows(2).all(|w| w[0] < w[1]);
        if !increasing
            || protrusions.first().is_some_and(|&p| p == 0)
            || protrusions.last().is_some_and(|&p| p > top + k)
        {
            return Err(Error::InvalidMatrix(format!("bad protrusions {protrusions:?}")));
        }
        Ok(QuarteredHexagonSpec { side, top, protrusions })
    }

    /// The region whose weighted tilings give the generating function below:
    /// side 4n+2, top n, protrusions 1, 2, 4, 5, …, 3n−2, 3n−1, 3n+1.
    pub fn qh(n: usize) -> Self {
        let mut p: Vec<usize> = (1..=n).flat_map(|k| [3 * k - 2, 3 * k - 1]).collect();
        p.push(3 * n + 1);
        QuarteredHexagonSpec::new(4 * n + 2, n, p).expect("well-formed family")
    }
}

/// a_j = ⌊(3j − 1)/2⌋.
pub fn a_j(j: usize) -> i64 {
    ((3 * j - 1) / 2) as i64
}

/// Start and end points of the path family for Q_{n,i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEndpoints {
    pub starts: Vec<(i64, i64)>,
    pub ends: Vec<(i64, i64)>,
}

impl PathEndpoints {
    /// s_j = (j−1, 2j−1) for j ≤ 2n, s_{2n+1} = (2n−1+i, 4n−1), e_j = (a_j − 1, 0).
    pub fn new(n: usize, i: usize) -> Result<Self> {
        check_range(n, i)?;
        let (n2, ii) = (2 * n as i64, i as i64);
        let mut starts: Vec<(i64, i64)> = (1..=n2).map(|j| (j - 1, 2 * j - 1)).collect();
        starts.push((n2 - 1 + ii, 2 * n2 - 1));
        let ends = (1..=2 * n + 1).map(|j| (a_j(j) - 1, 0)).collect();
        Ok(PathEndpoints { starts, ends })
    }
}

fn check_range(n: usize, i: usize) -> Result<()> {
    if n == 0 || i == 0 || i > n + 1 {
        Err(Error::OutOfRange(format!("(n, i) = ({n}, {i}) needs n ≥ 1, 1 ≤ i ≤ n+1")))
    } else {
        Ok(())
    }
}

/// q_{u,v}: the number of down/east paths between e_u and s_v.
pub fn lgv_matrix(n: usize, i: usize) -> Result<Matrix<Integer>> {
    check_range(n, i)?;
    let (n, i) = (n as i64, i as i64);
    let m = (2 * n + 1) as usize;
    Ok(Matrix::from_fn(m, m, |u, v| {
        let (au, v) = (a_j(u + 1), v as i64 + 1);
        if v <= 2 * n {
            binom_safe(au + v - 1, 2 * v - 1)
        } else {
            binom_safe(au + 2 * n - 1 - i, 4 * n - 1)
        }
    }))
}

pub fn q_ni_det(n: usize, i: usize) -> Result<Integer> {
    det_bareiss(&lgv_matrix(n, i)?)
}

/// D_{n,j} from the product formula.
pub fn d_nj(n: usize, j: usize) -> Result<Rational> {
    if n == 0 || j == 0 || j > 2 * n + 1 {
        return Err(Error::OutOfRange(format!("D({n}, {j})")));
    }
    let m = 2 * n + 1;
    let a: Vec<Rational> = (1..=m).map(|k| Rational::from_integer(a_j(k).into())).collect();
    let aj = &a[j - 1];
    let mut num = Rational::from_integer(2.into());
    for x in &a {
        num *= x;
    }
    for p in 0..m {
        for q in p + 1..m {
            num *= (&a[q] - &a[p]) * (&a[p] + &a[q]);
        }
    }
    let mut den = (1..=2 * n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(factorial(2 * k as u64 - 1)));
    for (q, aq) in a.iter().enumerate().take(m) {
        den *= aj + aq;
        if q > j - 1 {
            den *= aq - aj;
        } else if q < j - 1 {
            den *= aj - aq;
        }
    }
    Ok(num / den)
}

/// D_{n,j} as the minor of the first 2n columns of the path matrix without row j.
pub fn d_nj_minor(n: usize, j: usize) -> Result<Integer> {
    if n == 0 || j == 0 || j > 2 * n + 1 {
        return Err(Error::OutOfRange(format!("D({n}, {j})")));
    }
    let full = lgv_matrix(n, 1)?;
    let m = Matrix::from_fn(2 * n, 2 * n, |u, v| full[(u + (u >= j - 1) as usize, v)].clone());
    det_bareiss(&m)
}

/// Σ_j (−1)^{j+1} D_{n,j} C(a_j + 2n − 1 − i, 4n − 1).
pub fn q_ni_expand(n: usize, i: usize) -> Result<Integer> {
    check_range(n, i)?;
    let (nn, ii) = (n as i64, i as i64);
    let mut acc = Rational::zero();
    for j in 1..=2 * n + 1 {
        let t = d_nj(n, j)? * Rational::from_integer(binom_safe(a_j(j) + 2 * nn - 1 - ii, 4 * nn - 1));
        acc = if j % 2 == 1 { acc + t } else { acc - t };
    }
    if !acc.is_integer() || acc < Rational::zero() {
        return Err(Error::NonInteger(format!("D-expansion of Q({n}, {i}) = {acc}")));
    }
    Ok(acc.to_integer())
}

/// Counts vertex-disjoint families of down/east paths s_j → e_j by exhaustive search.
pub fn brute_paths(n: usize, i: usize) -> Result<Integer> {
    let ep = PathEndpoints::new(n, i)?;
    let width = ep.starts.iter().chain(&ep.ends).map(|p| p.0).max().unwrap_or(0) + 1;
    let height = ep.starts.iter().map(|p| p.1).max().unwrap_or(0) + 1;
    let mut used = vec![false; (width * height) as usize];
    let mut count = 0u64;
    family(&ep, 0, &mut used, width, &mut count);
    Ok(Integer::from(count))
}

fn family(ep: &PathEndpoints, p: usize, used: &mut [bool], width: i64, count: &mut u64) {
    if p == ep.starts.len() {
        *count += 1;
        return;
    }
    let (sx, sy) = ep.starts[p];
    walk(ep, p, sx, sy, used, width, count);
}

fn walk(ep: &PathEndpoints, p: usize, x: i64, y: i64, used: &mut [bool], width: i64, count: &mut u64) {
    let (ex, ey) = ep.ends[p];
    if x > ex || y < ey {
        return;
    }
    let cell = (y * width + x) as usize;
    if used[cell] {
        return;
    }
    used[cell] = true;
    if (x, y) == (ex, ey) {
        family(ep, p + 1, used, width, count);
    } else {
        walk(ep, p, x + 1, y, used, width, count);
        walk(ep, p, x, y - 1, used, width, count);
    }
    used[cell] = false;
}

fn x_poly(terms: &[(i64, Integer)]) -> LaurentPoly<Rational> {
    LaurentPoly::from_terms(Var::X, terms.iter().map(|(e, c)| (*e, Rational::from_integer(c.clone()))))
}

/// Σ_{1≤j≤i≤n+1} Q_{n,i} x^{2i−4j+2}, with Q from the path determinant.
pub fn genfun_qh(n: usize) -> Result<LaurentPoly<Rational>> {
    let mut terms = Vec::new();
    for i in 1..=n + 1 {
        let q = q_ni_det(n, i)?;
        for j in 1..=i {
            terms.push((2 * i as i64 - 4 * j as i64 + 2, q.clone()));
        }
    }
    Ok(x_poly(&terms))
}

/// Σ_i (x^{4i} − 1)/(x^{2i−2}(x⁴ − 1)) · Q_{n,i}, with Q from the D-expansion.
pub fn genfun_qh_expanded(n: usize) -> Result<LaurentPoly<Rational>> {
    let one = LaurentPoly::constant(Var::X, Rational::one());
    let x = |e: i64| LaurentPoly::monomial(Var::X, Rational::one(), e);
    let mut acc = LaurentPoly::zero_in(Var::X);
    for i in 1..=n + 1 {
        let ii = i as i64;
        let num = x(4 * ii) - one.clone();
        let den = x(2 * ii - 2) * (x(4) - one.clone());
        let ratio = num.div_exact(&den).expect("x⁴ − 1 divides x^{4i} − 1");
        acc = acc + ratio.scale(&Rational::from_integer(q_ni_expand(n, i)?));
    }
    Ok(acc)
}

/// The n×n determinant whose (i, j) entry is
/// (x² + x̄²)(C(4n, 2n−3j+i) − C(4n, 2n−3j−i)) + C(4n, 2n−3j+i+1) − C(4n, 2n−3j−i−1)
/// + C(4n, 2n−3j+i−1) − C(4n, 2n−3j−i+1).
pub fn genfun_qh_full_region(n: usize) -> Result<LaurentPoly<Rational>> {
    let nn = n as i64;
    let c = |k: i64| Rational::from_integer(binom_safe(4 * nn, k));
    let x2 = LaurentPoly::from_terms(Var::X, [(2, Rational::one()), (-2, Rational::one())]);
    let m = Matrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let b = 2 * nn - 3 * j;
        let lin = c(b + i) - c(b - i);
        let rest = c(b + i + 1) - c(b - i - 1) + c(b + i - 1) - c(b - i + 1);
        x2.scale(&lin) + LaurentPoly::constant(Var::X, rest)
    });
    det_bareiss(&m)
}

/// Checks det(∏_{k=j+1}^r (x_i − y_k − c)(x_i + y_k)) = ∏_{i<j}(x_j − x_i)(c − x_i − x_j)
/// at one rational point; `y` is indexed from 2 (its first slot is unused).
pub fn lemma_a2_holds(x: &[Rational], y: &[Rational], c: &Rational) -> Result<bool> {
    let r = x.len();
    if y.len() != r {
        return Err(Error::OutOfRange("x and y must have equal length".into()));
    }
    let m = Matrix::from_fn(r, r, |i, j| {
        (j + 1..r).fold(Rational::one(), |acc, k| acc * (&x[i] - &y[k] - c) * (&x[i] + &y[k]))
    });
    let lhs = det_field(&m)?;
    let mut rhs = Rational::one();
    for i in 0..r {
        for j in i + 1..r {
            rhs *= (&x[j] - &x[i]) * (c - &x[i] - &x[j]);
        }
    }
    Ok(lhs == rhs)
}

/// Q_{n,1}, …, Q_{n,n+1} from the path determinant.
pub fn q_table(n: usize) -> Result<Vec<Integer>> {
    (1..=n + 1).map(|i| q_ni_det(n, i)).collect()
}
