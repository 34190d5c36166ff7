use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{ExtScalar, RatFunc};

/// PBW monomial `F^f K^k E^e`. The derived order is lexicographic in `(f, k, e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub f: u32,
    pub k: i32,
    pub e: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { f: 0, k: 0, e: 0 };

    pub fn new(f: u32, k: i32, e: u32) -> Self {
        Monomial { f, k, e }
    }

    /// Eigenvalue of `ad_H`: `2(e - f)`.
    pub fn weight(&self) -> i64 {
        2 * (self.e as i64 - self.f as i64)
    }

    pub fn degree(&self) -> u32 {
        self.f + self.e + self.k.unsigned_abs()
    }
}

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<Monomial, ExtScalar>,
}

fn q_pow(e: i64) -> ExtScalar {
    ExtScalar::q_pow(e)
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn one() -> Self {
        AlgElement::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        AlgElement::term(ExtScalar::one(), m)
    }

    pub fn term(c: ExtScalar, m: Monomial) -> Self {
        let mut x = AlgElement::zero();
        x.add_term(m, c);
        x
    }

    pub fn scalar(c: ExtScalar) -> Self {
        AlgElement::term(c, Monomial::ONE)
    }

    /// `E = X^+`
    pub fn e() -> Self {
        AlgElement::monomial(Monomial::new(0, 0, 1))
    }

    /// `F = X^-`
    pub fn f() -> Self {
        AlgElement::monomial(Monomial::new(1, 0, 0))
    }

    /// `K = q^(H/2)`
    pub fn k() -> Self {
        AlgElement::monomial(Monomial::new(0, 1, 0))
    }

    pub fn k_inv() -> Self {
        AlgElement::monomial(Monomial::new(0, -1, 0))
    }

    pub fn k_pow(n: i32) -> Self {
        AlgElement::monomial(Monomial::new(0, n, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExtScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> ExtScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: ExtScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgElement, c: &ExtScalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            let t = if c.is_one() { x.clone() } else { x * c };
            self.add_term(*m, t);
        }
    }

    pub fn scale(&self, c: &ExtScalar) -> AlgElement {
        let mut out = AlgElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Maps every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Monomial, &ExtScalar) -> ExtScalar) -> AlgElement {
        let mut out = AlgElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(m, c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgElement {
        (0..n).fold(AlgElement::one(), |acc, _| &acc * self)
    }

    /// `x*y - y*x`
    pub fn commutator(&self, other: &AlgElement) -> AlgElement {
        &(self * other) - &(other * self)
    }
}

impl FromIterator<(Monomial, ExtScalar)> for AlgElement {
    fn from_iter<I: IntoIterator<Item = (Monomial, ExtScalar)>>(iter: I) -> Self {
        let mut out = AlgElement::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }
}

/// `(K^2 - K^-2)/(q - q^-1)`, the right-hand side of `EF - FE`.
fn ef_commutator_coeff() -> ExtScalar {
    let d = ExtScalar::from(&RatFunc::q_pow(1) - &RatFunc::q_pow(-1));
    d.inv().expect("q - q^-1 is nonzero")
}

/// Normal form of `E^c F^n`.
///
/// One rewrite `E F -> F E + (K^2 - K^-2)/(q - q^-1)` is applied at the
/// boundary and the remaining products are normalized recursively; each step
/// lowers `c + n` in the unresolved part.
fn e_pow_f_pow(c: u32, n: u32) -> AlgElement {
    if c == 0 || n == 0 {
        return AlgElement::monomial(Monomial::new(n, 0, c));
    }
    if c == 1 {
        // E F^n = F (E F^(n-1)) + t F^(n-1),  t F^j = F^j (q^-2j K^2 - q^2j K^-2)/(q - q^-1)
        let mut out = AlgElement::zero();
        for (m, x) in e_pow_f_pow(1, n - 1).terms() {
            out.add_term(Monomial::new(m.f + 1, m.k, m.e), x.clone());
        }
        let t = ef_commutator_coeff();
        let j = (n - 1) as i64;
        out.add_term(Monomial::new(n - 1, 2, 0), &t * &q_pow(-2 * j));
        out.add_term(Monomial::new(n - 1, -2, 0), -(&t * &q_pow(2 * j)));
        return out;
    }
    // E^c F^n = E^(c-1) (E F^n), with each term F^x K^y E^z of the inner product
    // giving (E^(c-1) F^x) K^y E^z.
    let mut out = AlgElement::zero();
    for (m, x) in e_pow_f_pow(1, n).terms() {
        let head = e_pow_f_pow(c - 1, m.f);
        out.add_scaled(&right_mul_k_e(&head, m.k, m.e), x);
    }
    out
}

/// `x * K^k E^e` for `x` in normal order, using `E K = q^-1 K E`.
fn right_mul_k_e(x: &AlgElement, k: i32, e: u32) -> AlgElement {
    let mut out = AlgElement::zero();
    for (m, c) in x.terms() {
        let factor = q_pow(-(m.e as i64) * k as i64);
        out.add_term(Monomial::new(m.f, m.k + k, m.e + e), c * &factor);
    }
    out
}

/// Product of two monomials in normal order.
pub fn mul_monomials(left: &Monomial, right: &Monomial) -> AlgElement {
    let middle = e_pow_f_pow(left.e, right.f);
    let mut out = AlgElement::zero();
    for (m, c) in middle.terms() {
        // F^a K^b (F^x K^y E^z) K^b' E^c' with K F = q^-1 F K and E K = q^-1 K E
        let exp = -(left.k as i64) * m.f as i64 - (m.e as i64) * right.k as i64;
        let mon = Monomial::new(left.f + m.f, left.k + m.k + right.k, m.e + right.e);
        out.add_term(mon, c * &q_pow(exp));
    }
    out
}

impl Mul<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (ml, cl) in self.terms() {
            for (mr, cr) in rhs.terms() {
                let coeff = cl * cr;
                out.add_scaled(&mul_monomials(ml, mr), &coeff);
            }
        }
        out
    }
}

impl Add<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ExtScalar::one());
        out
    }
}

impl Sub<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &ExtScalar::from_int(-1));
        out
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&ExtScalar::from_int(-1))
    }
}

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        -&self
    }
}

crate::forward_binops!(@op AlgElement, Add, add);
crate::forward_binops!(@op AlgElement, Sub, sub);
crate::forward_binops!(@op AlgElement, Mul, mul);
