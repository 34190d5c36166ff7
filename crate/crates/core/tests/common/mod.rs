//! Shared strategies and oracles for the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed};

use qlie::pbw::rewrite::Letter;
use qlie::{AlgElement, ExtScalar, Monomial, QLieVector, RatFunc, Rational};

pub const SEED: u64 = 0x5eed_0007;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Laurent polynomial, exponents -2..=2, coefficients in [-3, 3].
pub fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec(-3i64..=3, 5)
        .prop_map(|cs| RatFunc::laurent(cs.into_iter().zip(-2i64..).map(|(c, e)| (e, r(c, 1)))))
}

/// `a + b s` with Laurent coordinates and an optional `s` part.
pub fn scalar() -> impl Strategy<Value = ExtScalar> {
    (laurent(), prop::option::of(laurent())).prop_map(|(a, b)| ExtScalar::new(a, b.unwrap_or_default()))
}

/// Quotients of Laurent polynomials, with an optional `s` part.
pub fn rational_scalar() -> impl Strategy<Value = ExtScalar> {
    (fraction(), prop::option::of(fraction())).prop_map(|(a, b)| ExtScalar::new(a, b.unwrap_or_default()))
}

fn fraction() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| &n * &d.inv().unwrap())
}

pub fn vector() -> impl Strategy<Value = QLieVector> {
    (scalar(), scalar(), scalar()).prop_map(|(a, b, c)| QLieVector::new(a, b, c))
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..=2, -2i32..=2, 0u32..=2).prop_map(|(f, k, e)| Monomial::new(f, k, e))
}

pub fn alg_element() -> impl Strategy<Value = AlgElement> {
    prop::collection::vec((monomial(), scalar()), 1..=3).prop_map(|ts| {
        let mut x = AlgElement::zero();
        for (m, c) in ts {
            x.add_term(m, c);
        }
        x
    })
}

pub fn word() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop::sample::select(vec![Letter::E, Letter::F, Letter::K, Letter::KInv]), 0..=6)
}

// Independent truncated-series arithmetic on plain coefficient vectors.

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * r(k as i64, 1))
}

/// Coefficients of `exp(k h)` up to `h^order`.
pub fn exp_series(k: i64, order: usize) -> Vec<Rational> {
    (0..=order).map(|n| r(k, 1).pow(n as i32) / factorial(n)).collect()
}

pub fn series_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn series_scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

pub fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    (0..n).map(|k| (0..=k).fold(Rational::zero(), |acc, i| acc + &a[i] * &b[k - i])).collect()
}

/// Reciprocal of a series with nonzero constant term.
pub fn series_recip(a: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len()];
    out[0] = a[0].recip();
    for k in 1..a.len() {
        let s = (1..=k).fold(Rational::zero(), |acc, i| acc + &a[i] * &out[k - i]);
        out[k] = -s * &out[0];
    }
    out
}
