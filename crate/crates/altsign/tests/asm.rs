use std::sync::OnceLock;

use altsign::asm::{has_symmetry, statistic, vertex_type, Asm, BoundaryStat, SymmetryClass, VertexType};
use altsign::enumerate::enumerate_asms;
use proptest::prelude::*;

/// All ASMs of orders 1..=5, collected once.
fn corpus() -> &'static [Vec<Asm>] {
    static C: OnceLock<Vec<Vec<Asm>>> = OnceLock::new();
    C.get_or_init(|| {
        (0..=5)
            .map(|n| {
                let mut v = Vec::new();
                if n > 0 {
                    enumerate_asms(n, |a| v.push(a.clone()));
                }
                v
            })
            .collect()
    })
}

fn any_asm() -> impl Strategy<Value = Asm> {
    (1usize..=5).prop_flat_map(|n| (0..corpus()[n].len()).prop_map(move |k| corpus()[n][k].clone()))
}

fn partial_sums_ok(rows: &[Vec<i8>]) -> bool {
    let n = rows.len();
    let mut col = vec![0i32; n];
    for row in rows {
        let mut r = 0i32;
        for (j, &x) in row.iter().enumerate() {
            r += i32::from(x);
            col[j] += i32::from(x);
            if !(0..=1).contains(&r) || !(0..=1).contains(&col[j]) {
                return false;
            }
        }
        if r != 1 {
            return false;
        }
    }
    col.iter().all(|&c| c == 1)
}

proptest! {
    #[test]
    fn partial_sums_are_zero_or_one(a in any_asm()) {
        prop_assert!(partial_sums_ok(&a.rows()));
    }

    #[test]
    fn validation_matches_partial_sums(n in 1usize..=4, v in prop::collection::vec(-1i8..=1, 16)) {
        let rows: Vec<Vec<i8>> = (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect();
        prop_assert_eq!(Asm::new(rows.clone()).is_ok(), partial_sums_ok(&rows));
    }

    #[test]
    fn permutations_are_asms(p in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let rows = (0..6).map(|i| (0..6).map(|j| i8::from(p[i] == j)).collect()).collect();
        let a = Asm::new(rows).unwrap();
        prop_assert!(has_symmetry(&a, SymmetryClass::Plain));
        prop_assert_eq!(statistic(&a, BoundaryStat::FirstRowOne).unwrap(), p[0] + 1);
    }

    #[test]
    fn text_round_trip(a in any_asm()) {
        prop_assert_eq!(Asm::from_text(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn vertex_types_balance_each_row(a in any_asm()) {
        let n = a.order();
        for i in 0..n {
            let t: Vec<VertexType> = (0..n).map(|j| vertex_type(&a, i, j).unwrap()).collect();
            let ones = t.iter().filter(|&&v| v == VertexType::A1).count();
            let negs = t.iter().filter(|&&v| v == VertexType::A2).count();
            prop_assert_eq!(ones, negs + 1);
        }
    }

    #[test]
    fn statistics_stay_on_the_boundary(a in any_asm()) {
        let n = a.order();
        for s in [BoundaryStat::FirstRowOne, BoundaryStat::LastRowOne, BoundaryStat::FirstColOne] {
            let k = statistic(&a, s).unwrap();
            prop_assert!((1..=n).contains(&k));
        }
    }
}

#[test]
fn vertically_symmetric_central_column() {
    for n in [3, 5] {
        for a in corpus()[n].iter().filter(|a| has_symmetry(a, SymmetryClass::VS)) {
            let mid = n / 2;
            for i in 0..n {
                assert_eq!(a.get(i, mid), if i % 2 == 0 { 1 } else { -1 }, "{}", a.to_text());
            }
        }
    }
}

#[test]
fn symmetry_implications() {
    for n in [3, 5] {
        for a in &corpus()[n] {
            // The lone order-3 matrix has its second-row 1 in column 1.
            if n >= 5 && has_symmetry(a, SymmetryClass::VHS) {
                assert_ne!(statistic(a, BoundaryStat::SecondRowFirstOne).unwrap(), 1);
            }
            if has_symmetry(a, SymmetryClass::VOS) {
                for c in [SymmetryClass::VS, SymmetryClass::VHS, SymmetryClass::OOS] {
                    assert!(has_symmetry(a, c), "{c} fails for {}", a.to_text());
                }
            }
            if has_symmetry(a, SymmetryClass::QTS) {
                assert!(has_symmetry(a, SymmetryClass::HTS));
            }
        }
    }
}

#[test]
fn rejects_malformed_input() {
    assert!(Asm::new(vec![vec![1, 0], vec![0]]).is_err());
    assert!(Asm::new(vec![vec![0, 1], vec![0, 1]]).is_err());
    assert!(Asm::from_text("1 0\n0 2").is_err());
    assert!(vertex_type(&Asm::identity(3), 3, 0).is_err());
}
