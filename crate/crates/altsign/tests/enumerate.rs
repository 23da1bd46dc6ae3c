use altsign::arith::Integer;
use altsign::asm::{BoundaryStat, SymmetryClass};
use altsign::closed_forms::asm_total;
use altsign::enumerate::{
    count_total, perverse_table_full_grid, refined_table, refined_table_filtered, refined_table_jobs, Provenance,
    RefinedTable,
};
use num_traits::Zero;
use proptest::prelude::*;

fn table() -> impl Strategy<Value = RefinedTable> {
    prop::collection::vec(0u64..10_000, 0..8).prop_map(|v| {
        RefinedTable::from_values(
            SymmetryClass::Plain,
            7,
            BoundaryStat::FirstRowOne,
            Provenance::BruteForce,
            v.into_iter().map(Integer::from),
        )
    })
}

proptest! {
    #[test]
    fn merge_is_commutative_and_associative(a in table(), b in table(), c in table()) {
        prop_assert_eq!(a.merge(&b).unwrap().counts, b.merge(&a).unwrap().counts);
        let left = a.merge(&b).unwrap().merge(&c).unwrap();
        let right = a.merge(&b.merge(&c).unwrap()).unwrap();
        prop_assert_eq!(left.counts, right.counts);
    }

    #[test]
    fn merge_adds_pointwise(a in table(), b in table()) {
        let m = a.merge(&b).unwrap();
        for i in 0..10 {
            prop_assert_eq!(m.get(i), a.get(i) + b.get(i));
        }
        prop_assert_eq!(m.total(), a.total() + b.total());
    }

    #[test]
    fn json_round_trip(a in table()) {
        prop_assert_eq!(RefinedTable::from_json(&a.to_json()).unwrap(), a);
    }
}

#[test]
fn merge_rejects_mismatched_tables() {
    let a = RefinedTable::new(SymmetryClass::Plain, 4, BoundaryStat::FirstRowOne, Provenance::BruteForce);
    let b = RefinedTable::new(SymmetryClass::Plain, 5, BoundaryStat::FirstRowOne, Provenance::BruteForce);
    assert!(a.merge(&b).is_err());
}

#[test]
fn totals_match_product_formula() {
    for n in 1..=7 {
        assert_eq!(count_total(n, SymmetryClass::Plain).unwrap(), asm_total(n).unwrap(), "n={n}");
    }
}

#[test]
fn orbit_search_matches_filtering() {
    for class in SymmetryClass::ALL.into_iter().filter(|&c| c != SymmetryClass::VHP) {
        let mut stats = vec![BoundaryStat::FirstRowOne];
        if matches!(class, SymmetryClass::VS | SymmetryClass::VHS) {
            stats.push(BoundaryStat::SecondRowFirstOne);
        }
        for order in (1..=7).filter(|&o| class.admits_order(o)) {
            for &stat in &stats {
                if stat == BoundaryStat::SecondRowFirstOne && order < 3 {
                    continue;
                }
                let fast = refined_table(order, class, stat).unwrap();
                let slow = refined_table_filtered(order, class, stat).unwrap();
                assert_eq!(fast.counts, slow.counts, "{class} order {order} {stat}");
            }
        }
    }
}

#[test]
fn perverse_reduction_matches_full_grid() {
    for stat in [BoundaryStat::SecondRowFirstOne, BoundaryStat::SecondColFirstOne] {
        let reduced = refined_table(6, SymmetryClass::VHP, stat).unwrap();
        assert_eq!(reduced.counts, perverse_table_full_grid(1, stat).unwrap().counts, "{stat}");
    }
}

#[test]
fn parallel_merge_equals_serial() {
    let cases = [
        (SymmetryClass::Plain, BoundaryStat::FirstRowOne, [5, 6]),
        (SymmetryClass::VS, BoundaryStat::SecondRowFirstOne, [7, 9]),
        (SymmetryClass::HTS, BoundaryStat::FirstRowOne, [5, 6]),
    ];
    for (class, stat, orders) in cases {
        for order in orders {
            let serial = refined_table_jobs(order, class, stat, 1).unwrap();
            for jobs in [2, 3] {
                assert_eq!(
                    refined_table_jobs(order, class, stat, jobs).unwrap(),
                    serial,
                    "{class} {order} jobs={jobs}"
                );
            }
        }
    }
}

#[test]
fn quarter_turn_first_and_last_rows_agree() {
    for order in [3, 4, 5, 7, 8] {
        let first = refined_table(order, SymmetryClass::QTS, BoundaryStat::FirstRowOne).unwrap();
        let last = refined_table(order, SymmetryClass::QTS, BoundaryStat::LastRowOne).unwrap();
        assert_eq!(first.counts, last.counts, "order {order}");
    }
}

#[test]
fn vertically_symmetric_support() {
    for n in 1..=4 {
        let t = refined_table(2 * n + 1, SymmetryClass::VS, BoundaryStat::SecondRowFirstOne).unwrap();
        assert_eq!(t.support(), (1..=n).collect::<Vec<_>>(), "order {}", 2 * n + 1);
    }
}

#[test]
fn counts_are_nonnegative_and_sum_to_total() {
    for class in [SymmetryClass::HTS, SymmetryClass::OS, SymmetryClass::OOS] {
        for order in (1..=7).filter(|&o| class.admits_order(o)) {
            let t = refined_table(order, class, BoundaryStat::FirstRowOne).unwrap();
            assert!(t.counts.values().all(|c| *c >= Integer::zero()));
            let by_col = refined_table(order, class, BoundaryStat::FirstColOne).unwrap();
            assert_eq!(t.total(), by_col.total(), "{class} {order}");
        }
    }
}

#[test]
fn incompatible_orders_are_errors() {
    assert!(refined_table(4, SymmetryClass::VS, BoundaryStat::FirstRowOne).is_err());
    assert!(refined_table(6, SymmetryClass::QTS, BoundaryStat::FirstRowOne).is_err());
    assert!(refined_table(5, SymmetryClass::OS, BoundaryStat::FirstRowOne).is_err());
}
