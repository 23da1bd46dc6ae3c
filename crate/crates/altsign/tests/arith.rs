use altsign::arith::{
    alpha, binom_safe, rat, sigma, Cyclotomic, ExactDiv, Field, Integer, LaurentPoly, Rational, Ring, Var,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=15).prop_map(|(n, d)| rat(n, d))
}

fn cyc() -> impl Strategy<Value = Cyclotomic> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Cyclotomic::new(a, b))
}

fn laurent() -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((-4i64..=4, small_rat()), 0..6).prop_map(|t| LaurentPoly::from_terms(Var::Z, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a.clone(), Cyclotomic::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.checked_inv().unwrap(), Cyclotomic::one());
            prop_assert!(!a.norm().is_zero());
        }
    }
}

proptest! {
    #[test]
    fn sigma_is_odd_under_inversion(u in cyc()) {
        prop_assume!(!u.is_zero());
        let ubar = u.checked_inv().unwrap();
        prop_assert_eq!(sigma(&ubar).unwrap(), -sigma(&u).unwrap());
    }

    #[test]
    fn conjugation_is_a_ring_map(a in cyc(), b in cyc()) {
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        prop_assert_eq!((a.clone() + b.clone()).conj(), a.conj() + b.conj());
        prop_assert!((a.clone() * a.conj()).is_rational());
    }

    #[test]
    fn laurent_eval_is_a_ring_map(p in laurent(), r in laurent(), t in small_rat()) {
        prop_assume!(!t.is_zero());
        let ev = |x: &LaurentPoly<Rational>| x.eval(&t).unwrap();
        prop_assert_eq!(ev(&(p.clone() * r.clone())), ev(&p) * ev(&r));
        prop_assert_eq!(ev(&(p.clone() + r.clone())), ev(&p) + ev(&r));
        prop_assert_eq!(ev(&(p.clone() - r.clone())), ev(&p) - ev(&r));
    }

    #[test]
    fn laurent_reflect_matches_inverse_point(p in laurent(), t in small_rat()) {
        prop_assume!(!t.is_zero());
        prop_assert_eq!(p.reflect().eval(&t).unwrap(), p.eval(&t.inv().unwrap()).unwrap());
    }

    #[test]
    fn laurent_exact_division_undoes_product(p in laurent(), r in laurent()) {
        prop_assume!(!r.is_zero());
        prop_assert_eq!((p.clone() * r.clone()).div_exact(&r), Some(p));
    }

    #[test]
    fn laurent_canonical_form(p in laurent()) {
        prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!((p.clone() - p).len(), 0);
    }

    #[test]
    fn laurent_json_round_trip(p in laurent()) {
        prop_assert_eq!(LaurentPoly::<Rational>::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rationals_are_reduced(n in -1000i64..1000, d in -50i64..50) {
        prop_assume!(d != 0);
        let r = rat(n, d);
        prop_assert!(r.denom() > &Integer::zero());
        prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
    }

    #[test]
    fn integer_division_is_exact_only(a in -500i64..500, b in -30i64..30) {
        prop_assume!(b != 0);
        let (a, b) = (Integer::from(a), Integer::from(b));
        let prod = a.clone() * b.clone();
        prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        if b.clone() * (a.clone() / b.clone()) != a {
            prop_assert_eq!(a.div_exact(&b), None);
        }
    }
}

#[test]
fn sixth_root_relations() {
    let q = Cyclotomic::q();
    let qbar = Cyclotomic::qbar();
    assert_eq!(q.clone() * q.clone(), q.clone() - Cyclotomic::one());
    assert_eq!(q.clone() + qbar.clone(), Cyclotomic::one());
    assert_eq!(q.checked_inv().unwrap(), qbar);
    assert_eq!(q.powu(6), Cyclotomic::one());
    assert_eq!(sigma(&q).unwrap(), sigma(&(q.clone() * q.clone())).unwrap());
    assert_eq!(alpha(&Cyclotomic::one()).unwrap(), sigma(&q).unwrap().powu(2));
    assert!(Cyclotomic::zero().checked_inv().is_err());
}

#[test]
fn binomials_vanish_without_paths() {
    assert_eq!(binom_safe(5, 2), Integer::from(10));
    assert_eq!(binom_safe(5, -1), Integer::zero());
    assert_eq!(binom_safe(2, 5), Integer::zero());
    assert_eq!(binom_safe(-3, 1), Integer::zero());
    assert_eq!(binom_safe(0, 0), Integer::one());
}

#[test]
fn rational_field_division() {
    assert_eq!(Field::div(&rat(3, 4), &rat(9, 8)), Some(rat(2, 3)));
    assert_eq!(Field::div(&rat(1, 2), &Rational::zero()), None);
}
