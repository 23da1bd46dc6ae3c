//! Closed-form refined counts. Every evaluator works in exact rationals and
//! insists that the result is an integer.

use num_traits::{One, Zero};

use crate::arith::{factorial, factorial_i, inv_factorial, pochhammer, rat, rat_to_int, Integer, Rational};
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::enumerate::{Provenance, RefinedTable};
use crate::{Error, Result};

fn fac(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn to_int(r: Rational, what: impl FnOnce() -> String) -> Result<Integer> {
    rat_to_int(&r).ok_or_else(|| Error::NonInteger(format!("{} = {r}", what())))
}

fn out_of_range(what: String) -> Error {
    Error::OutOfRange(what)
}

/// ∏_{i=0}^{n−1} (3i+1)!/(n+i)!, the number of ASMs of order n.
pub fn asm_total(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(out_of_range("asm_total needs n ≥ 1".into()));
    }
    let n = n as i64;
    let v = (0..n).fold(Rational::one(), |acc, i| acc * fac(3 * i + 1) / fac(n + i));
    to_int(v, || format!("asm_total({n})"))
}

/// Refined count by the position of the 1 in the first row:
/// C(n+i−2, n−1) · (2n−i−1)!/(n−i)! · ∏_{j=0}^{n−2} (3j+1)!/(n+j)!.
pub fn a_plain(n: usize, i: usize) -> Result<Integer> {
    if n == 0 || i == 0 || i > n {
        return Err(out_of_range(format!("a_plain({n}, {i})")));
    }
    let (n, i) = (n as i64, i as i64);
    let binom = fac(n + i - 2) / (fac(n - 1) * fac(i - 1));
    let prod = (0..n - 1).fold(Rational::one(), |acc, j| acc * fac(3 * j + 1) / fac(n + j));
    to_int(binom * fac(2 * n - i - 1) / fac(n - i) * prod, || format!("a_plain({n}, {i})"))
}

/// ∏_{k=1}^{n−1} (6k−2)!(2k−1)! / ((4k−1)!(4k−2)!).
fn vs_product(n: i64) -> Rational {
    (1..n).fold(Rational::one(), |acc, k| acc * fac(6 * k - 2) * fac(2 * k - 1) / (fac(4 * k - 1) * fac(4 * k - 2)))
}

/// Off-diagonally symmetric ASMs of order 2n by the position of the first-row 1.
/// Zero for i ∈ {−1, 0, 1} and for i beyond 2n, where no matrix has its 1.
pub fn a_o(two_n: usize, i: i64) -> Result<Integer> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::Incompatible { class: "os".into(), order: two_n });
    }
    if i < -1 {
        return Err(out_of_range(format!("a_o({two_n}, {i})")));
    }
    let n = (two_n / 2) as i64;
    if i <= 1 || i > 2 * n {
        return Ok(Integer::zero());
    }
    let sum = (1..i).fold(Rational::zero(), |acc, k| {
        let t = fac(2 * n + k - 2) * fac(4 * n - k - 1) / (fac(4 * n - 2) * fac(k - 1) * fac(2 * n - k));
        if (i + k - 1) % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    });
    let v = sum * vs_product(n) / Rational::from_integer(Integer::from(2).pow((n - 1) as u32));
    to_int(v, || format!("a_o({two_n}, {i})"))
}

/// Vertically symmetric ASMs of order 2n+1 by the position of the first 1 in the
/// second row.
pub fn a_v(order: usize, i: usize) -> Result<Integer> {
    if order.is_multiple_of(2) || order < 3 {
        return Err(Error::Incompatible { class: "vs".into(), order });
    }
    let n = (order / 2) as i64;
    let i = i as i64;
    if i < 1 || i > n {
        return Err(out_of_range(format!("a_v({order}, {i})")));
    }
    let two = Rational::from_integer(Integer::from(2).pow((n - 1) as u32));
    let v =
        fac(2 * n + i - 2) * fac(4 * n - i - 1) / (two * fac(4 * n - 2) * fac(i - 1) * fac(2 * n - i)) * vs_product(n);
    to_int(v, || format!("a_v({order}, {i})"))
}

/// Prefactor of the half-turn formula.
fn ht_prefactor(n: i64) -> Rational {
    let head = fac(2 * n - 1) * fac(2 * n - 1) / (fac(n - 1) * fac(n - 1) * fac(3 * n - 3) * fac(3 * n - 1));
    (0..n).fold(head, |acc, j| {
        acc * rat(3 * j + 2, 3 * j + 1) * fac(3 * j + 1) * fac(3 * j + 1) / (fac(n + j) * fac(n + j))
    })
}

/// The half-turn formula with its summand read literally:
/// (n² − nj + (j−1)²·(n+j−3)!)·(2n−j−1)!(n+i−j−1)!(2n−i+j−2)! / ((j−1)!(n−j+1)!(i−j)!(n−i+j−1)!).
/// Reciprocal factorials of negative arguments are 0; a negative factorial in a
/// numerator makes the value undefined.
pub fn a_ht_even_as_printed(two_n: usize, i: usize) -> Result<Rational> {
    ht_sum(two_n, i, |n, j, f| {
        let (n2, jj) = (
            Rational::from_integer(Integer::from(n * n - n * j)),
            Rational::from_integer(Integer::from((j - 1) * (j - 1))),
        );
        Ok(n2 + jj * f(n + j - 3)?)
    })
}

/// The half-turn formula with the numerator read as (n² − nj + (j−1)²)·(n+j−3)!.
/// This reading matches brute force for orders 4 to 10; at order 2 it contains
/// (−1)! and is undefined.
pub fn a_ht_even(two_n: usize, i: usize) -> Result<Integer> {
    let v = ht_sum(two_n, i, |n, j, f| {
        Ok(Rational::from_integer(Integer::from(n * n - n * j + (j - 1) * (j - 1))) * f(n + j - 3)?)
    })?;
    to_int(v, || format!("a_ht_even({two_n}, {i})"))
}

type FacFn<'a> = &'a dyn Fn(i64) -> Result<Rational>;

fn ht_sum(two_n: usize, i: usize, head: impl Fn(i64, i64, FacFn) -> Result<Rational>) -> Result<Rational> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::Incompatible { class: "hts".into(), order: two_n });
    }
    if i == 0 || i > two_n {
        return Err(out_of_range(format!("a_ht_even({two_n}, {i})")));
    }
    let (n, i) = ((two_n / 2) as i64, i as i64);
    let f = |m: i64| {
        factorial_i(m)
            .map(Rational::from_integer)
            .ok_or_else(|| Error::Singular(format!("({m})! in a numerator at order {two_n}")))
    };
    let mut sum = Rational::zero();
    for j in 1..=i {
        let den = inv_factorial(j - 1) * inv_factorial(n - j + 1) * inv_factorial(i - j) * inv_factorial(n - i + j - 1);
        if den.is_zero() {
            continue;
        }
        let num = head(n, j, &f)? * f(2 * n - j - 1)? * f(n + i - j - 1)? * f(2 * n - i + j - 2)?;
        sum += num * den;
    }
    Ok(ht_prefactor(n) * sum)
}

fn vhp_n(order: usize) -> Result<usize> {
    if order % 4 != 2 || order < 6 {
        return Err(Error::Incompatible { class: "vhp".into(), order });
    }
    Ok(order / 4)
}

/// Σ_{k=0}^{i−2} A_O(2n, k+2)·(A_O(2n, i−k) + A_O(2n, i−3−k)): perverse matrices
/// of order 4n+2 by the leftmost 1 of the second row.
pub fn a_vhp_row(order: usize, i: usize) -> Result<Integer> {
    vhp_convolution(order, i, 3)
}

/// Σ_{k=0}^{i−2} A_O(2n, k+2)·(A_O(2n, i−k) + A_O(2n, i−1−k)): by the topmost 1 of
/// the second column.
pub fn a_vhp_col(order: usize, i: usize) -> Result<Integer> {
    vhp_convolution(order, i, 1)
}

fn vhp_convolution(order: usize, i: usize, offset: i64) -> Result<Integer> {
    let two_n = 2 * vhp_n(order)?;
    let i = i as i64;
    let mut acc = Integer::zero();
    for k in 0..=i - 2 {
        acc += a_o(two_n, k + 2)? * (a_o(two_n, i - k)? + a_o(two_n, i - offset - k)?);
    }
    Ok(acc)
}

/// Shared shape of the tiling-count sum; `base` and `skip_first` select between
/// the printed and the reconstructed reading.
fn q_sum(n: i64, i: i64, base: i64, skip_first: bool) -> Rational {
    let r = |v: i64| Rational::from_integer(Integer::from(v));
    let mut s = Rational::zero();
    for j in 0..=n {
        let c = Rational::from_integer(Integer::from(base).pow(j as u32)) * r(3 * n - 3 * j + 1)
            / (fac(3 * j) * fac(n - j) * pochhammer(&r(3 * j + 1), (3 * n) as u64));
        let u = pochhammer(&(r(n - j) + rat(4, 3)), (2 * j) as u64) * pochhammer(&r(2 * n + 3 * j - i - 1), 2)
            / pochhammer(&r(3 * n + 3 * j + 1), 2);
        let v = if skip_first && j == 0 {
            Rational::zero()
        } else {
            pochhammer(&(r(n - j) + rat(2, 3)), (2 * j) as u64) * pochhammer(&r(-2 * n + 3 * j - i), 2)
                / pochhammer(&r(3 * n - 3 * j + 1), 2)
        };
        s += c * pochhammer(&r(3 * j - 2 * n - i + 2), (4 * n - 3) as u64) * (u - v);
    }
    s
}

fn q_prefactor(n: i64, linear: impl Fn(i64) -> i64) -> Rational {
    let head = Rational::new(
        Integer::from(3).pow((n * (n - 1)) as u32),
        Integer::from(2).pow((n - 1) as u32) * factorial((4 * n - 1) as u64),
    );
    (0..n).fold(head, |acc, j| {
        acc * Rational::from_integer(Integer::from(linear(j))) * fac(6 * j + 6) / fac(2 * n + 2 * j + 1)
    })
}

fn check_q_range(n: usize, i: usize) -> Result<()> {
    if n == 0 || i == 0 || i > n + 1 {
        Err(out_of_range(format!("Q({n}, {i}) needs n ≥ 1 and 1 ≤ i ≤ n+1")))
    } else {
        Ok(())
    }
}

/// Tiling counts Q_{n,i} of the quartered hexagons, in the form that agrees with
/// the lattice-path determinant: prefactor factors (3j+4)(6j+6)!/(2n+2j+1)!,
/// powers 27^j, and no second subterm at j = 0.
pub fn q_ni(n: usize, i: usize) -> Result<Integer> {
    check_q_range(n, i)?;
    let (n, i) = (n as i64, i as i64);
    let v = q_prefactor(n, |j| 3 * j + 4) * q_sum(n, i, 27, true);
    to_int(v, || format!("q_ni({n}, {i})"))
}

/// The printed Q_{n,i} expression: factors (4j+3), powers 9^j, both subterms for
/// every j. Returned as a rational because it need not be an integer.
pub fn q_ni_as_printed(n: usize, i: usize) -> Result<Rational> {
    check_q_range(n, i)?;
    let (n, i) = (n as i64, i as i64);
    Ok(q_prefactor(n, |j| 4 * j + 3) * q_sum(n, i, 9, false))
}

fn table(
    class: SymmetryClass,
    order: usize,
    stat: BoundaryStat,
    values: Vec<Integer>,
    prov: Provenance,
) -> RefinedTable {
    RefinedTable::from_values(class, order, stat, prov, values)
}

/// Closed-form table for a class/order/statistic, where one exists.
pub fn closed_form_table(class: SymmetryClass, order: usize, stat: BoundaryStat) -> Result<RefinedTable> {
    use BoundaryStat::*;
    use SymmetryClass::*;
    let collect = |len: usize, f: &dyn Fn(usize) -> Result<Integer>| (1..=len).map(f).collect::<Result<Vec<_>>>();
    match (class, stat) {
        (Plain, FirstRowOne | LastRowOne | FirstColOne) => {
            Ok(table(class, order, stat, collect(order, &|i| a_plain(order, i))?, Provenance::ClosedForm))
        }
        (VS, SecondRowFirstOne) => {
            Ok(table(class, order, stat, collect(order / 2, &|i| a_v(order, i))?, Provenance::ClosedForm))
        }
        (OS, FirstRowOne) => {
            Ok(table(class, order, stat, collect(order, &|i| a_o(order, i as i64))?, Provenance::ClosedForm))
        }
        (HTS, FirstRowOne) if order.is_multiple_of(2) => {
            Ok(table(class, order, stat, collect(order, &|i| a_ht_even(order, i))?, Provenance::ClosedForm))
        }
        (VHP, SecondRowFirstOne) => {
            let n = vhp_n(order)?;
            Ok(table(class, order, stat, collect(2 * n + 1, &|i| a_vhp_row(order, i))?, Provenance::Convolution))
        }
        (VHP, SecondColFirstOne) => {
            let n = vhp_n(order)?;
            Ok(table(class, order, stat, collect(2 * n, &|i| a_vhp_col(order, i))?, Provenance::Convolution))
        }
        _ => Err(Error::Incompatible { class: format!("{class} by {stat} (no closed form)"), order }),
    }
}
