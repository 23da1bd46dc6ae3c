use super::common::{a_o_sum, brute, count, sum_over, zc, zp};
use super::IdentityCheck;
use crate::arith::{Integer, Ring};
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::closed_forms::{a_vhp_col, a_vhp_row};
use crate::{Error, Result};

/// Vertically and horizontally perverse ASMs of order 4n+2: both convolution
/// formulas against enumeration, the two squared-sum Laurent identities, and the
/// row/column recurrence.
pub fn check_vhp(n: usize) -> Result<IdentityCheck> {
    if n == 0 || n > 2 {
        return Err(Error::OutOfRange(format!("check_vhp supports n = 1, 2, got {n}")));
    }
    let order = 4 * n + 2;
    let nn = n as i64;
    let ar = brute(SymmetryClass::VHP, order, BoundaryStat::SecondRowFirstOne)?;
    let ac = brute(SymmetryClass::VHP, order, BoundaryStat::SecondColFirstOne)?;
    let mut chk = IdentityCheck::new("vhp", n, "convolution", "brute-force");

    for i in 1..=2 * n + 1 {
        if !chk.equal("row convolution", format!("i={i}"), &a_vhp_row(order, i)?, &ar.get(i as i64)) {
            break;
        }
    }
    // Past i = 2n the column convolution no longer counts matrices.
    for i in 1..=2 * n {
        if !chk.equal("column convolution", format!("i={i}"), &a_vhp_col(order, i)?, &ac.get(i as i64)) {
            break;
        }
    }

    let sq = a_o_sum(n)?.powu(2);
    let rhs9 = sum_over(1..=2 * nn, |i| count(&ar, i + 1) * (zp(i - 4 * nn - 1) + zp(-i)));
    chk.laurent("(z³+1)·(A_O sum)² vs second-row table", &((zp(3) + zc(1)) * sq.clone()), &rhs9);

    let b = |i: i64| count(&ac, i) - count(&ac, i - 1);
    let lhs10 = (zc(1) - zp(2)) * sq;
    let shifted = sum_over(1..=2 * nn, |i| b(i + 1) * (zp(i - 4 * nn - 1) - zp(-i - 1)));
    chk.laurent("(1−z²)·(A_O sum)² vs second-column differences", &lhs10, &shifted);
    let printed = sum_over(1..=2 * nn, |i| b(i) * (zp(i - 4 * nn - 1) - zp(-i + 1)));
    chk.note(if printed == lhs10 {
        "difference identity with B(i), z^{−i+1} also holds"
    } else {
        "difference identity with B(i), z^{−i+1} fails; B(i+1), z^{−i−1} holds"
    });

    let at = |i: i64| ac.get(i);
    for i in 1..=2 * nn {
        let rhs: Integer = ar.get(i) + at(i - 1) - at(i - 2);
        if !chk.equal("A^C(i) = A^R(i) + A^C(i−1) − A^C(i−2)", format!("i={i}"), &at(i), &rhs) {
            break;
        }
    }
    Ok(chk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_6() {
        let c = check_vhp(1).unwrap();
        assert!(c.passed(), "{c}");
        assert!(c.detail.iter().any(|d| d.contains("fails")));
    }
}
