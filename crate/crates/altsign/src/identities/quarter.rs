use super::common::{brute, count, sum_over, zc, zp, Zp};
use super::IdentityCheck;
use crate::arith::Ring;
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::closed_forms::a_plain;
use crate::{Error, Result};

/// Σ_i A(n, i) z^{i−1} from the closed form.
fn plain_poly(n: usize) -> Result<Zp> {
    let mut acc = zc(0);
    for i in 1..=n {
        acc = acc + zc(a_plain(n, i)?) * zp(i as i64 - 1);
    }
    Ok(acc)
}

/// Σ_i A_HT(m, i) z^{i−1} by enumeration.
fn ht_poly(m: usize) -> Result<Zp> {
    let t = brute(SymmetryClass::HTS, m, BoundaryStat::FirstRowOne)?;
    Ok(sum_over(1..=m as i64, |i| count(&t, i) * zp(i - 1)))
}

/// Σ_i A(order, i) z^{i−2} for a brute-force class table.
fn shifted_table(class: SymmetryClass, order: usize) -> Result<Zp> {
    let t = brute(class, order, BoundaryStat::FirstRowOne)?;
    Ok(sum_over(1..=order as i64, |i| count(&t, i) * zp(i - 2)))
}

/// Quarter-turn symmetric ASMs by the first row as a product of two plain
/// generating functions and a half-turn one. Orders 4n and 4n+1 follow the
/// stated theorems; order 4n+3 is the companion identity derived from the same
/// partition-function factorization and is labelled as such.
pub fn check_qt(order: usize) -> Result<IdentityCheck> {
    if order < 3 || order % 4 == 2 {
        return Err(Error::Incompatible { class: "qts".into(), order });
    }
    let n = order / 4;
    let (name, a, h) = match order % 4 {
        0 => ("qt-4n", n, 2 * n),
        1 => ("qt-4n+1", n, 2 * n + 1),
        _ => ("qt-4n+3 (derived identity)", n + 1, 2 * n + 1),
    };
    let mut chk = IdentityCheck::new(name, n, "closed-form·brute-force", "brute-force");
    chk.note(format!("order {order}; half-turn factor from enumeration at order {h}"));
    let rhs = plain_poly(a)?.powu(2) * ht_poly(h)?;
    chk.laurent("A_QT vs A(n)²·A_HT", &shifted_table(SymmetryClass::QTS, order)?, &rhs);
    Ok(chk)
}

/// Quasi-quarter-turn symmetric ASMs of order 4n+2:
/// Σ A_qQT(4n+2, i) z^{i−2} = A(n; z)·A(n+1; z)·A_HT(2n+1; z).
pub fn check_qqt(n: usize) -> Result<IdentityCheck> {
    if n == 0 {
        return Err(Error::OutOfRange("check_qqt needs n ≥ 1".into()));
    }
    let order = 4 * n + 2;
    let mut chk = IdentityCheck::new("qqt", n, "closed-form·brute-force", "brute-force");
    chk.note(format!("order {order}"));
    let rhs = plain_poly(n)? * plain_poly(n + 1)? * ht_poly(2 * n + 1)?;
    chk.laurent("A_qQT vs A(n)·A(n+1)·A_HT", &shifted_table(SymmetryClass::QQTS, order)?, &rhs);
    Ok(chk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_4_and_6() {
        assert_eq!(shifted_table(SymmetryClass::QTS, 4).unwrap(), zc(1) + zp(1));
        let c = check_qt(4).unwrap();
        assert!(c.passed(), "{c}");
        let expect = zc(1) + zc(2) * zp(1) + zc(2) * zp(2) + zp(3);
        assert_eq!(shifted_table(SymmetryClass::QQTS, 6).unwrap(), expect);
        let c = check_qqt(1).unwrap();
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn orders_5_and_7() {
        for order in [5, 7] {
            let c = check_qt(order).unwrap();
            assert!(c.passed(), "{c}");
        }
    }
}
