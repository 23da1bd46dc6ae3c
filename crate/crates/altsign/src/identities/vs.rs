use super::common::{a_o_sum, brute, count, sum_over, zp};
use super::IdentityCheck;
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::closed_forms::{a_o, a_v};
use crate::enumerate::RefinedTable;
use crate::{Error, Result};

/// Vertically symmetric ASMs of order 2n+1 against off-diagonally symmetric ones
/// of order 2n: the Laurent identity, the pointwise split, and the product formula.
pub fn check_vsasm(n: usize) -> Result<IdentityCheck> {
    if n == 0 || n > 6 {
        return Err(Error::OutOfRange(format!("check_vsasm supports 1 ≤ n ≤ 6, got {n}")));
    }
    let av = brute(SymmetryClass::VS, 2 * n + 1, BoundaryStat::SecondRowFirstOne)?;
    vsasm_against(n, &av)
}

fn vsasm_against(n: usize, av: &RefinedTable) -> Result<IdentityCheck> {
    let (order, nn) = (2 * n + 1, n as i64);
    let mut chk = IdentityCheck::new("vsasm", n, "closed-form", "brute-force");
    let lhs = a_o_sum(n)? * (zp(0) + zp(1));
    let rhs = sum_over(1..=nn, |i| count(av, i) * (zp(i - 2 * nn - 1) + zp(-i)));
    chk.laurent("A_O sum·(1+z) vs A_V table", &lhs, &rhs);
    for i in 1..=nn {
        let split = a_o(2 * n, i)? + a_o(2 * n, i + 1)?;
        if !chk.equal("A_V(2n+1, i) = A_O(2n, i) + A_O(2n, i+1)", format!("i={i}"), &split, &av.get(i)) {
            break;
        }
    }
    for i in 1..=n {
        if !chk.equal("A_V product formula", format!("i={i}"), &a_v(order, i)?, &av.get(i as i64)) {
            break;
        }
    }
    if av.support().iter().any(|&i| i > n) {
        chk.fail("A_V support", "i>n", "0", format!("{:?}", av.support()));
    }
    Ok(chk)
}

/// A_V(2n+1, i) = A_VC(2n+1, i) + A_VC(2n+1, i+1) with A_VC the first-column
/// statistic on vertically symmetric ASMs, and A_VC(2n+1, i) = A_O(2n, i).
pub fn check_problem2(n: usize) -> Result<IdentityCheck> {
    if n == 0 || n > 5 {
        return Err(Error::OutOfRange(format!("check_problem2 supports 1 ≤ n ≤ 5, got {n}")));
    }
    let order = 2 * n + 1;
    let vc = brute(SymmetryClass::VS, order, BoundaryStat::FirstColOne)?;
    let av = brute(SymmetryClass::VS, order, BoundaryStat::SecondRowFirstOne)?;
    let ao = brute(SymmetryClass::OS, 2 * n, BoundaryStat::FirstRowOne)?;
    let mut chk =
        IdentityCheck::new("problem2", n, "brute-force:vs/first-col", "brute-force:vs/second-row,os/first-row");
    for i in 1..=n as i64 {
        if !chk.equal("A_V(i) = A_VC(i) + A_VC(i+1)", format!("i={i}"), &(vc.get(i) + vc.get(i + 1)), &av.get(i)) {
            break;
        }
    }
    for i in 1..=order as i64 {
        if !chk.equal("A_VC(2n+1, i) = A_O(2n, i)", format!("i={i}"), &vc.get(i), &ao.get(i)) {
            break;
        }
    }
    Ok(chk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Integer;

    #[test]
    fn vsasm_small() {
        for n in 1..=3 {
            let c = check_vsasm(n).unwrap();
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn corrupted_table_gives_witness() {
        let mut av = brute(SymmetryClass::VS, 5, BoundaryStat::SecondRowFirstOne).unwrap();
        assert_eq!(av.get(1), Integer::from(1));
        assert_eq!(av.get(2), Integer::from(2));
        av.counts.insert(2, Integer::from(3));
        let c = vsasm_against(2, &av).unwrap();
        assert!(!c.passed());
        let w = c.witness.unwrap();
        assert_eq!(w.comparison, "A_O sum·(1+z) vs A_V table");
        assert_eq!(w.at, "z^-3");
    }

    #[test]
    fn problem2_small() {
        for n in 1..=3 {
            let c = check_problem2(n).unwrap();
            assert!(c.passed(), "{c}");
        }
    }
}
