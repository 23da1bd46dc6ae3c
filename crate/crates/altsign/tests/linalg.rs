use altsign::arith::{rat, Cyclotomic, Integer, LaurentPoly, Rational, Ring, Var};
use altsign::linalg::{
    det_bareiss, det_cofactor, det_field, pfaffian, pfaffian_elim, pfaffian_expand, pfaffian_matching, Matrix,
    SkewMatrix,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn square(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(small_rat(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

fn skew(orders: &'static [usize]) -> impl Strategy<Value = SkewMatrix<Rational>> {
    prop::sample::select(orders).prop_flat_map(|n| {
        prop::collection::vec(small_rat(), n * (n - 1) / 2).prop_map(move |v| {
            let mut it = v.into_iter();
            SkewMatrix::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pfaffian_squared_is_determinant(m in skew(&[2, 4, 6, 8])) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(pf.clone() * pf, det_field(&m.to_matrix()).unwrap());
    }

    #[test]
    fn pfaffian_routes_agree(m in skew(&[2, 4, 6])) {
        let pf = pfaffian_elim(&m).unwrap();
        prop_assert_eq!(&pfaffian_matching(&m).unwrap(), &pf);
        prop_assert_eq!(&pfaffian_expand(&m).unwrap(), &pf);
    }

    #[test]
    fn odd_skew_determinant_vanishes(m in skew(&[3, 5, 7])) {
        prop_assert!(det_field(&m.to_matrix()).unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_field_elimination(m in square(8)) {
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_field(&m).unwrap());
    }

    #[test]
    fn cofactor_matches_field_elimination(m in square(5)) {
        prop_assert_eq!(det_cofactor(&m).unwrap(), det_field(&m).unwrap());
    }

    #[test]
    fn row_swap_negates(m in square(6), a in 0usize..6, b in 0usize..6) {
        let n = m.rows();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let mut s = m.clone();
        s.swap_rows(a, b);
        prop_assert_eq!(det_field(&s).unwrap(), -det_field(&m).unwrap());
    }

    #[test]
    fn repeated_row_gives_zero(m in square(6), a in 0usize..6, b in 0usize..6) {
        let n = m.rows();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let d = Matrix::from_fn(n, n, |i, j| if i == b { m[(a, j)].clone() } else { m[(i, j)].clone() });
        prop_assert!(det_field(&d).unwrap().is_zero());
    }

    #[test]
    fn transpose_preserves_determinant(m in square(6)) {
        prop_assert_eq!(det_field(&m.transpose()).unwrap(), det_field(&m).unwrap());
    }

    #[test]
    fn integer_bareiss_matches_rational(v in prop::collection::vec(-9i64..=9, 36)) {
        let ints = Matrix::from_fn(6, 6, |i, j| Integer::from(v[i * 6 + j]));
        let rats = ints.map(|x| Rational::from_integer(x.clone()));
        prop_assert_eq!(Rational::from_integer(det_bareiss(&ints).unwrap()), det_field(&rats).unwrap());
    }
}

#[test]
fn pfaffian_sign_convention() {
    let two = SkewMatrix::from_fn(2, |_, _| rat(3, 1));
    assert_eq!(pfaffian(&two).unwrap(), rat(3, 1));
    let vals = [[0, 2, 3, 5], [0, 0, 7, 11], [0, 0, 0, 13]];
    let four = SkewMatrix::from_fn(4, |i, j| rat(vals[i][j], 1));
    // a12·a34 − a13·a24 + a14·a23
    assert_eq!(pfaffian(&four).unwrap(), rat(2 * 13 - 3 * 11 + 5 * 7, 1));
}

#[test]
fn skew_input_validation() {
    let bad = Matrix::from_rows(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]]);
    assert!(SkewMatrix::from_matrix(&bad).is_err());
    assert!(det_field(&Matrix::from_fn(2, 3, |_, _| rat(1, 1))).is_err());
    assert!(pfaffian(&SkewMatrix::from_fn(3, |_, _| rat(1, 1))).is_err());
}

#[test]
fn laurent_entries_use_bareiss() {
    let z = LaurentPoly::<Rational>::var(Var::Z);
    let one = LaurentPoly::one();
    let m = Matrix::from_rows(vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]]);
    assert_eq!(det_bareiss(&m).unwrap(), z.powu(2) - one);
    let c = Matrix::from_fn(2, 2, |i, j| Cyclotomic::from((i + 2 * j) as i64) + Cyclotomic::q());
    let expect = c[(0, 0)].clone() * c[(1, 1)].clone() - c[(0, 1)].clone() * c[(1, 0)].clone();
    assert_eq!(det_field(&c).unwrap(), expect);
}
