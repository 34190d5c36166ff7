mod common;

use common::*;
use proptest::prelude::*;
use qlie::scalar::h_series;
use qlie::{ExtScalar, HSeries, Rational, ScalarError};

fn q() -> ExtScalar {
    ExtScalar::q()
}

fn qi() -> ExtScalar {
    ExtScalar::q_pow(-1)
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn field_axioms(x in rational_scalar(), y in rational_scalar(), z in rational_scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        } else {
            prop_assert_eq!(x.inv(), Err(ScalarError::DivisionByZero));
        }
    }

    #[test]
    fn qconj_is_an_involutive_automorphism(x in rational_scalar(), y in rational_scalar()) {
        prop_assert_eq!(x.qconj().qconj(), x.clone());
        prop_assert_eq!((&x * &y).qconj(), &x.qconj() * &y.qconj());
        prop_assert_eq!((&x + &y).qconj(), &x.qconj() + &y.qconj());
    }

    #[test]
    fn eval_q1_is_a_ring_map(x in scalar(), y in scalar()) {
        let (ex, ey) = (x.eval_q1().unwrap(), y.eval_q1().unwrap());
        prop_assert_eq!((&x * &y).eval_q1().unwrap(), &ex * &ey);
        prop_assert_eq!((&x + &y).eval_q1().unwrap(), &ex + &ey);
        prop_assert_eq!(x.qconj().eval_q1().unwrap(), ex);
    }

    #[test]
    fn h_series_truncation_and_value(x in scalar(), m in 0usize..4, extra in 1usize..4) {
        let n = m + extra;
        let long = h_series(&x, n).unwrap();
        prop_assert_eq!(long.truncate(m), h_series(&x, m).unwrap());
        prop_assert_eq!(long.coeff(0), &x.eval_q1().unwrap());
    }

    #[test]
    fn h_series_is_multiplicative(x in scalar(), y in scalar()) {
        let n = 4;
        let lhs = h_series(&(&x * &y), n).unwrap();
        prop_assert_eq!(lhs, h_series(&x, n).unwrap().mul(&h_series(&y, n).unwrap()));
    }

    #[test]
    fn qconj_flips_h(x in scalar()) {
        let n = 4;
        let s = h_series(&x, n).unwrap();
        let flipped: Vec<Rational> =
            s.coeffs().iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        prop_assert_eq!(h_series(&x.qconj(), n).unwrap(), HSeries::from_coeffs(flipped, n));
    }

    #[test]
    fn canonical_text_round_trips(x in rational_scalar()) {
        prop_assert_eq!(qlie::frontend::parse_scalar(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn s_consistency() {
    let s = ExtScalar::s();
    for n in 0..8 {
        assert_eq!(h_series(&(&s * &s), n).unwrap(), h_series(&ExtScalar::sigma(), n).unwrap());
    }
    let sq = h_series(&s, 6).unwrap();
    assert_eq!(sq.mul(&sq), h_series(&ExtScalar::sigma(), 6).unwrap());
}

#[test]
fn sinh_oracle() {
    // q - q^-1 = 2 sinh(h)
    let expected = series_add(&exp_series(1, 5), &series_scale(&exp_series(-1, 5), &r(-1, 1)));
    assert_eq!(h_series(&(&q() - &qi()), 5).unwrap(), HSeries::from_coeffs(expected.clone(), 5));
    assert_eq!(expected, vec![r(0, 1), r(2, 1), r(0, 1), r(1, 3), r(0, 1), r(1, 60)]);
}

#[test]
fn sech_oracle() {
    // 2/(q + q^-1) = sech(h)
    let cosh2 = series_add(&exp_series(1, 4), &exp_series(-1, 4));
    let expected = series_scale(&series_recip(&cosh2), &r(2, 1));
    assert_eq!(h_series(&ExtScalar::sigma(), 4).unwrap(), HSeries::from_coeffs(expected.clone(), 4));
    assert_eq!(expected, vec![r(1, 1), r(0, 1), r(-1, 2), r(0, 1), r(5, 24)]);
}

#[test]
fn constant_series() {
    assert_eq!(h_series(&ExtScalar::one(), 3).unwrap(), HSeries::constant(r(1, 1), 3));
}

#[test]
fn pole_at_one_is_reported() {
    let x = (&q() - &ExtScalar::one()).inv().unwrap();
    assert_eq!(x.eval_q1(), Err(ScalarError::PoleAtQ1));
    assert_eq!(h_series(&x, 2), Err(ScalarError::PoleAtQ1));
}

#[test]
fn s_is_not_rational() {
    // s^2 = sigma, s fixed by conjugation, s(1) = 1
    let s = ExtScalar::s();
    assert_eq!(&s * &s, ExtScalar::sigma());
    assert_eq!(s.qconj(), s);
    assert_eq!(s.eval_q1().unwrap(), r(1, 1));
    assert!(s.as_ratfunc().is_none());
}
