//! Seeded generators for verification cases.
//!
//! Every case draws from its own ChaCha stream, so case `i` of seed `s` is
//! reproducible regardless of how many cases run or in which order.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::pbw::rewrite::Letter;
use crate::pbw::{AlgElement, Monomial};
use crate::qlie::QLieVector;
use crate::scalar::{ExtScalar, RatFunc, Rational};

pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Laurent polynomial with exponents in `-2..=2` and coefficients in `-3..=3`.
pub fn laurent<R: Rng>(rng: &mut R) -> RatFunc {
    RatFunc::laurent((-2..=2).map(|e| (e, Rational::from_integer(rng.gen_range(-3i64..=3).into()))))
}

/// Nonzero Laurent polynomial.
pub fn nonzero_laurent<R: Rng>(rng: &mut R) -> RatFunc {
    loop {
        let x = laurent(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `a + b s` with Laurent `a`; `b` is zero half of the time.
pub fn scalar<R: Rng>(rng: &mut R) -> ExtScalar {
    let a = laurent(rng);
    let b = if rng.gen_bool(0.5) { laurent(rng) } else { RatFunc::zero() };
    ExtScalar::new(a, b)
}

/// Like [`scalar`] but with genuine rational functions as components.
pub fn rational_scalar<R: Rng>(rng: &mut R) -> ExtScalar {
    let a = &laurent(rng) * &nonzero_laurent(rng).inv().expect("nonzero");
    let b = if rng.gen_bool(0.5) {
        &laurent(rng) * &nonzero_laurent(rng).inv().expect("nonzero")
    } else {
        RatFunc::zero()
    };
    ExtScalar::new(a, b)
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> ExtScalar {
    loop {
        let x = scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R) -> QLieVector {
    QLieVector { coords: std::array::from_fn(|_| scalar(rng)) }
}

/// Up to three terms `F^f K^k E^e` with `f, e <= 2` and `|k| <= 2`.
pub fn alg_element<R: Rng>(rng: &mut R) -> AlgElement {
    let mut x = AlgElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = Monomial::new(rng.gen_range(0..=2), rng.gen_range(-2..=2), rng.gen_range(0..=2));
        x.add_term(m, scalar(rng));
    }
    x
}

/// Word of length at most 6 over `E, F, K, K^-1`.
pub fn letter_word<R: Rng>(rng: &mut R) -> Vec<Letter> {
    const LETTERS: [Letter; 4] = [Letter::E, Letter::F, Letter::K, Letter::KInv];
    (0..rng.gen_range(0..=6)).map(|_| LETTERS[rng.gen_range(0..4)]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = scalar(&mut case_rng(7, 3));
        let b = scalar(&mut case_rng(7, 3));
        assert_eq!(a, b);
        let xs: Vec<_> = (0..8).map(|i| vector(&mut case_rng(7, i))).collect();
        assert!(xs.windows(2).any(|w| w[0] != w[1]));
    }

    #[test]
    fn bounds() {
        let mut rng = case_rng(1, 0);
        for _ in 0..50 {
            let x = laurent(&mut rng);
            for (e, c) in x.numerator_terms() {
                assert!((-2..=2).contains(&e));
                assert!(c.abs() <= Rational::from_integer(3.into()));
            }
            assert!(letter_word(&mut rng).len() <= 6);
        }
    }
}
