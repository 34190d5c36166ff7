//! `U_q(sl2)` in the PBW basis `F^a K^b E^c` with `K = q^(H/2)`.
//!
//! Relations: `E F - F E = (K^2 - K^-2)/(q - q^-1)`, `K E = q E K`,
//! `K F = q^-1 F K`, `K K^-1 = 1`.

mod ad;
mod element;
pub mod rewrite;

pub use ad::{ad_apply, ad_letter, AdLetter, AdWord};
pub use element::{mul_monomials, AlgElement, Monomial};

use crate::scalar::ExtScalar;

fn q_pow(e: i64) -> ExtScalar {
    ExtScalar::q_pow(e)
}

/// `1/(q^3 + q^-3)`
fn casimir_normalization() -> ExtScalar {
    (&q_pow(3) + &q_pow(-3)).inv().expect("nonzero")
}

/// The central element
/// `C = ((q - q^-1)^2 E F + q^-1 K^2 + q K^-2) / (q^3 + q^-3)`.
pub fn casimir() -> AlgElement {
    let d = &q_pow(1) - &q_pow(-1);
    let ef = &AlgElement::e() * &AlgElement::f();
    let mut c = ef.scale(&(&d * &d));
    c.add_scaled(&AlgElement::k_pow(2), &q_pow(-1));
    c.add_scaled(&AlgElement::k_pow(-2), &q_pow(1));
    c.scale(&casimir_normalization())
}

/// `ad_C` as a combination of generator words, using `ad_(ab) = ad_a ad_b`.
pub fn casimir_word() -> AdWord {
    use AdLetter::*;
    let d = &q_pow(1) - &q_pow(-1);
    let mut w = AdWord::word(&d * &d, vec![E, F]);
    w.push(q_pow(-1), vec![K, K]);
    w.push(q_pow(1), vec![KInv, KInv]);
    w.scale(&casimir_normalization())
}

/// `x y - y x`
pub fn commutator(x: &AlgElement, y: &AlgElement) -> AlgElement {
    x.commutator(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casimir_normal_form() {
        // (q - q^-1)^2 F E + q K^2 + q^-1 K^-2, over q^3 + q^-3
        let d = &q_pow(1) - &q_pow(-1);
        let n = casimir_normalization();
        let expected: AlgElement = [
            (Monomial::new(1, 0, 1), &(&d * &d) * &n),
            (Monomial::new(0, 2, 0), &q_pow(1) * &n),
            (Monomial::new(0, -2, 0), &q_pow(-1) * &n),
        ]
        .into_iter()
        .collect();
        assert_eq!(casimir(), expected);
    }

    #[test]
    fn casimir_is_central() {
        let c = casimir();
        for g in [AlgElement::e(), AlgElement::f(), AlgElement::k(), AlgElement::k_inv()] {
            assert!(commutator(&c, &g).is_zero());
        }
    }

    #[test]
    fn casimir_coefficients_have_classical_limit() {
        for (_, c) in casimir().terms() {
            assert!(c.eval_q1().is_ok());
        }
        assert_eq!(casimir_normalization().eval_q1().unwrap(), crate::Rational::new(1.into(), 2.into()));
    }
}
