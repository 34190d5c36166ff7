//! The deformed adjoint action of `U_q(sl2)` on itself.

use std::fmt;

use super::element::AlgElement;
use crate::scalar::ExtScalar;

/// A generator whose adjoint action is known in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdLetter {
    E,
    F,
    K,
    KInv,
    H,
}

impl AdLetter {
    pub const ALL: [AdLetter; 5] = [AdLetter::E, AdLetter::F, AdLetter::K, AdLetter::KInv, AdLetter::H];

    pub fn name(self) -> &'static str {
        match self {
            AdLetter::E => "E",
            AdLetter::F => "F",
            AdLetter::K => "K",
            AdLetter::KInv => "Kinv",
            AdLetter::H => "H",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "E" | "X+" => Some(AdLetter::E),
            "F" | "X-" => Some(AdLetter::F),
            "K" => Some(AdLetter::K),
            "Kinv" | "K^-1" => Some(AdLetter::KInv),
            "H" => Some(AdLetter::H),
            _ => None,
        }
    }
}

impl fmt::Display for AdLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Adjoint action of a single generator:
///
/// - `ad_E(x) = E x K - q^-1 K x E`
/// - `ad_F(x) = F x K - q K x F`
/// - `ad_H(x) = H x - x H`, i.e. `2(e - f)` on `F^f K^k E^e`
/// - `ad_K(x) = K x K^-1`, i.e. `q^(e - f)` on `F^f K^k E^e`, and inversely for `K^-1`
pub fn ad_letter(g: AdLetter, x: &AlgElement) -> AlgElement {
    match g {
        AdLetter::E | AdLetter::F => {
            let gen = if g == AdLetter::E { AlgElement::e() } else { AlgElement::f() };
            let sign = if g == AdLetter::E { -1 } else { 1 };
            let k = AlgElement::k();
            let first = &(&gen * x) * &k;
            let second = &(&k * x) * &gen;
            &first - &second.scale(&ExtScalar::q_pow(sign))
        }
        AdLetter::H => x.map_coeffs(|m, c| c * &ExtScalar::from_int(m.weight())),
        AdLetter::K => x.map_coeffs(|m, c| c * &ExtScalar::q_pow(m.weight() / 2)),
        AdLetter::KInv => x.map_coeffs(|m, c| c * &ExtScalar::q_pow(-m.weight() / 2)),
    }
}

/// Formal linear combination of words in [`AdLetter`]s. A word acts as the
/// composition of its letters with the leftmost letter acting last, so that
/// `ad_(ab) = ad_a ad_b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AdWord {
    terms: Vec<(ExtScalar, Vec<AdLetter>)>,
}

impl AdWord {
    /// The identity operator (the empty word).
    pub fn identity() -> Self {
        AdWord::word(ExtScalar::one(), Vec::new())
    }

    pub fn zero() -> Self {
        AdWord::default()
    }

    pub fn word(c: ExtScalar, letters: Vec<AdLetter>) -> Self {
        let mut w = AdWord::zero();
        w.push(c, letters);
        w
    }

    pub fn letters(letters: &[AdLetter]) -> Self {
        AdWord::word(ExtScalar::one(), letters.to_vec())
    }

    pub fn terms(&self) -> &[(ExtScalar, Vec<AdLetter>)] {
        &self.terms
    }

    /// Adds `c * letters`, merging with an identical word.
    pub fn push(&mut self, c: ExtScalar, letters: Vec<AdLetter>) {
        if c.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(_, w)| *w == letters) {
            let sum = &self.terms[pos].0 + &c;
            if sum.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].0 = sum;
            }
        } else {
            self.terms.push((c, letters));
        }
    }

    pub fn add(&self, other: &AdWord) -> AdWord {
        let mut out = self.clone();
        for (c, w) in &other.terms {
            out.push(c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExtScalar) -> AdWord {
        let mut out = AdWord::zero();
        for (x, w) in &self.terms {
            out.push(x * c, w.clone());
        }
        out
    }

    /// Operator composition `self ∘ other` (word concatenation).
    pub fn compose(&self, other: &AdWord) -> AdWord {
        let mut out = AdWord::zero();
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.push(a * b, w);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AdWord {
        (0..n).fold(AdWord::identity(), |acc, _| acc.compose(self))
    }
}

/// Applies the operator `w` to `x`.
pub fn ad_apply(w: &AdWord, x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (c, letters) in &w.terms {
        let y = letters.iter().rev().fold(x.clone(), |acc, &g| ad_letter(g, &acc));
        out.add_scaled(&y, c);
    }
    out
}

impl fmt::Display for AdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let letters: Vec<_> = w.iter().map(|g| g.name()).collect();
            write!(f, "({c}) ad[{}]", letters.join(" "))?;
        }
        Ok(())
    }
}
