use altsign::arith::Integer;
use altsign::asm::{BoundaryStat, SymmetryClass};
use altsign::closed_forms::{a_o, a_plain, a_v, asm_total, closed_form_table, q_ni};
use altsign::enumerate::{refined_table, RefinedTable};
use num_traits::Zero;

fn same_values(a: &RefinedTable, b: &RefinedTable) -> bool {
    (0..=a.order as i64 + 1).all(|i| a.get(i) == b.get(i))
}

#[test]
fn closed_forms_match_enumeration() {
    use BoundaryStat::*;
    use SymmetryClass::*;
    let cases: &[(SymmetryClass, BoundaryStat, &[usize])] = &[
        (Plain, FirstRowOne, &[1, 2, 3, 4, 5, 6, 7]),
        (Plain, LastRowOne, &[3, 5]),
        (Plain, FirstColOne, &[4, 6]),
        (VS, SecondRowFirstOne, &[3, 5, 7, 9, 11]),
        (OS, FirstRowOne, &[2, 4, 6, 8, 10]),
        (HTS, FirstRowOne, &[4, 6, 8]),
        (VHP, SecondRowFirstOne, &[6, 10]),
        (VHP, SecondColFirstOne, &[6, 10]),
    ];
    for &(class, stat, orders) in cases {
        for &order in orders {
            let closed = closed_form_table(class, order, stat).unwrap();
            let brute = refined_table(order, class, stat).unwrap();
            assert!(same_values(&closed, &brute), "{class} {stat} order {order}:\n{closed}\n{brute}");
        }
    }
}

#[test]
fn refined_rows_sum_to_totals() {
    for n in 1..=12 {
        let sum = (1..=n).map(|i| a_plain(n, i).unwrap()).fold(Integer::zero(), |a, b| a + b);
        assert_eq!(sum, asm_total(n).unwrap(), "n={n}");
    }
    assert_eq!(asm_total(10).unwrap(), Integer::from(129_534_272_700u64));
}

#[test]
fn boundary_values() {
    assert_eq!(a_plain(5, 1).unwrap(), asm_total(4).unwrap());
    assert_eq!(a_o(6, 1).unwrap(), Integer::zero());
    assert_eq!(a_o(6, -1).unwrap(), Integer::zero());
    assert_eq!(a_v(5, 1).unwrap(), Integer::from(1));
    assert!(a_plain(3, 4).is_err() || a_plain(3, 4).unwrap().is_zero());
}

#[test]
fn tiling_counts_are_positive() {
    for n in 1..=6 {
        for i in 1..=n + 1 {
            assert!(q_ni(n, i).unwrap() > Integer::zero(), "Q({n},{i})");
        }
    }
}

#[test]
fn no_closed_form_is_an_error() {
    assert!(closed_form_table(SymmetryClass::QTS, 5, BoundaryStat::FirstRowOne).is_err());
    assert!(closed_form_table(SymmetryClass::HTS, 5, BoundaryStat::FirstRowOne).is_err());
    assert!(closed_form_table(SymmetryClass::HTS, 2, BoundaryStat::FirstRowOne).is_err());
}
