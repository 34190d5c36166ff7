//! Rational functions in `q` kept in a unique reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::{Rational, ScalarError};

/// `q^shift * num(q) / den(q)`.
///
/// Canonical form: `num` is zero or has a nonzero constant term; `den` has a
/// nonzero constant term, coprime integer coefficients and a positive leading
/// coefficient; `gcd(num, den) = 1`. The zero function is `shift = 0, den = 1`.
/// Two values are equal iff their canonical forms are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: 0, num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(c.into()))
    }

    /// `c * q^exp`
    pub fn monomial(c: Rational, exp: i64) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: exp, num: Poly::constant(c), den: Poly::one() }
    }

    pub fn q_pow(exp: i64) -> Self {
        RatFunc::monomial(Rational::one(), exp)
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        terms
            .into_iter()
            .fold(RatFunc::zero(), |acc, (e, c)| &acc + &RatFunc::monomial(c, e))
    }

    /// Builds `q^shift * num / den` and canonicalizes; `den` must be nonzero.
    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(shift, num, den))
    }

    fn canonical(shift: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::assemble(shift, num, den)
        } else {
            Self::assemble(shift, num.div_exact(&g), den.div_exact(&g))
        }
    }

    /// Canonical form of `q^shift * num / den` for coprime `num` and `den`.
    fn assemble(mut shift: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let nv = num.valuation();
        let dv = den.valuation();
        shift += nv as i64 - dv as i64;
        let num = num.shift_down(nv);
        let den = den.shift_down(dv);
        if den.is_one() {
            return RatFunc { shift, num, den };
        }
        let (content, prim) = den.primitive_part();
        let num = if content.is_one() { num } else { num.scale(&content.recip()) };
        RatFunc { shift, num, den: prim }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Nonzero `(exponent, coefficient)` pairs of the numerator including the shift,
    /// ascending.
    pub fn numerator_terms(&self) -> Vec<(i64, Rational)> {
        self.num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.shift + i as i64, c.clone()))
            .collect()
    }

    /// If the value is `c * q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if self.is_laurent() && self.num.coeffs().len() == 1 {
            Some((self.num.coeffs()[0].clone(), self.shift))
        } else {
            None
        }
    }

    /// If the value is a constant, returns it.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The automorphism `q -> 1/q`.
    pub fn qconj(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let nd = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        Self::canonical(-self.shift - nd + dd, self.num.reversed(), self.den.reversed())
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> Result<Rational, ScalarError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtQ1);
        }
        Ok(self.num.eval_one() / d)
    }

    fn add_impl(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        let other_num = if negate { other.num.neg() } else { other.num.clone() };
        if self.is_zero() {
            return RatFunc { shift: other.shift, num: other_num, den: other.den.clone() };
        }
        let m = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = other_num.shift_up((other.shift - m) as usize);
        if self.den == other.den {
            let num = a.add(&b);
            if self.den.is_one() {
                return Self::assemble(m, num, Poly::one());
            }
            return Self::canonical(m, num, self.den.clone());
        }
        // a/d1 + b/d2 with g = gcd(d1, d2): only g can share factors with the numerator
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = a.mul(&other.den).add(&b.mul(&self.den));
            return Self::assemble(m, num, self.den.mul(&other.den));
        }
        let d1 = self.den.div_exact(&g);
        let d2 = other.den.div_exact(&g);
        let num = a.mul(&d2).add(&b.mul(&d1));
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() { (num, g) } else { (num.div_exact(&h), g.div_exact(&h)) };
        Self::assemble(m, num, d1.mul(&d2).mul(&g))
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&other.num), den: Poly::one() };
        }
        // each numerator is already coprime to its own denominator
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g), d.div_exact(&g))
            }
        };
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::assemble(shift, n1.mul(&n2), d1.mul(&d2))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; use [`RatFunc::inv`] for a checked version.
impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

crate::forward_binops!(RatFunc);

/// Writes a polynomial given as ascending `(exponent, coefficient)` pairs,
/// highest exponent first: `2q^2 - q + 1/2 - 3q^-1`.
pub(crate) fn write_laurent(f: &mut impl fmt::Write, terms: &[(i64, Rational)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if i > 0 {
            f.write_str(if neg { " - " } else { " + " })?;
        } else if neg {
            f.write_str("-")?;
        }
        write_term(f, &c.abs(), *e)?;
    }
    Ok(())
}

/// `c q^e` for a positive coefficient `c`.
pub(crate) fn write_term(f: &mut impl fmt::Write, c: &Rational, e: i64) -> fmt::Result {
    if e == 0 {
        return write!(f, "{c}");
    }
    if !c.is_one() {
        if c.is_integer() {
            write!(f, "{c}")?;
        } else {
            write!(f, "{c} ")?;
        }
    }
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write_laurent(f, &self.numerator_terms());
        }
        let num = self.numerator_terms();
        if num.len() == 1 {
            write_laurent(f, &num)?;
            f.write_str("/(")?;
        } else {
            f.write_str("(")?;
            write_laurent(f, &num)?;
            f.write_str(")/(")?;
        }
        let den: Vec<_> = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.clone()))
            .collect();
        write_laurent(f, &den)?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn lp(terms: &[(i64, i64)]) -> RatFunc {
        RatFunc::laurent(terms.iter().map(|&(e, c)| (e, r(c, 1))))
    }

    #[test]
    fn canonical_form_is_unique() {
        // 2/(q + q^-1) built two ways
        let a = &RatFunc::from_int(2) / &lp(&[(1, 1), (-1, 1)]);
        let b = &lp(&[(1, 4)]) / &lp(&[(0, 2), (2, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.shift(), 1);
        assert_eq!(a.denominator(), &Poly::from_i64s(&[1, 0, 1]));
    }

    #[test]
    fn cancels_common_factor() {
        // (q^2 - 1)/(q - 1) = q + 1
        let x = &lp(&[(2, 1), (0, -1)]) / &lp(&[(1, 1), (0, -1)]);
        assert_eq!(x, lp(&[(1, 1), (0, 1)]));
        assert!(x.is_laurent());
    }

    #[test]
    fn denominator_sign_and_content() {
        let x = &RatFunc::one() / &lp(&[(0, -2), (1, -4)]);
        assert_eq!(x.denominator(), &Poly::from_i64s(&[1, 2]));
        assert_eq!(x.numerator(), &Poly::constant(r(-1, 2)));
    }

    #[test]
    fn qconj_negates_exponents() {
        let x = lp(&[(1, 1), (-2, 3)]);
        assert_eq!(x.qconj(), lp(&[(-1, 1), (2, 3)]));
        let y = &lp(&[(0, 1)]) / &lp(&[(0, 1), (1, 2)]);
        assert_eq!(y.qconj().qconj(), y);
        // 1/(1+2q) -> q/(q+2)
        assert_eq!(y.qconj(), &lp(&[(1, 1)]) / &lp(&[(0, 2), (1, 1)]));
    }

    #[test]
    fn eval_at_one() {
        let x = &lp(&[(1, 2)]) / &lp(&[(0, 1), (2, 1)]);
        assert_eq!(x.eval_q1().unwrap(), r(1, 1));
        let pole = &RatFunc::one() / &lp(&[(1, 1), (-1, -1)]);
        assert_eq!(pole.eval_q1(), Err(ScalarError::PoleAtQ1));
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(1, 2), (0, -1), (-1, 1)]).to_string(), "2q - 1 + q^-1");
        let x = &lp(&[(1, 2)]) / &lp(&[(0, 1), (2, 1)]);
        assert_eq!(x.to_string(), "2q/(q^2 + 1)");
        assert_eq!(RatFunc::monomial(r(-1, 2), 1).to_string(), "-1/2 q");
        assert_eq!(RatFunc::zero().to_string(), "0");
    }

    #[test]
    fn pow_negative() {
        let x = lp(&[(1, 1), (0, 1)]);
        assert_eq!(&x.pow(-2).unwrap() * &x.pow(2).unwrap(), RatFunc::one());
        assert!(RatFunc::zero().pow(-1).is_err());
    }
}
