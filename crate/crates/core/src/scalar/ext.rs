//! The coefficient field `Q(q)(s)` with `s^2 = 2/(q + q^-1)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ratfunc::{write_term, RatFunc};
use super::{Rational, ScalarError};

/// `a + b*s` where `s` is the positive square root of `2/(q + q^-1)`.
///
/// `s` is fixed by `q`-conjugation and evaluates to `1` at `q = 1`. Since
/// `2q/(q^2 + 1)` is not a square in `Q(q)`, the pair `(a, b)` is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    a: RatFunc,
    b: RatFunc,
}

/// `2/(q + q^-1)`, the square of `s`.
pub fn sigma() -> RatFunc {
    RatFunc::from_parts(1, crate::scalar::Poly::from_i64s(&[2]), crate::scalar::Poly::from_i64s(&[1, 0, 1]))
        .expect("nonzero denominator")
}

impl ExtScalar {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        ExtScalar { a, b }
    }

    pub fn zero() -> Self {
        ExtScalar::default()
    }

    pub fn one() -> Self {
        ExtScalar::from(RatFunc::one())
    }

    pub fn from_int(c: i64) -> Self {
        ExtScalar::from(RatFunc::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        ExtScalar::from(RatFunc::from_rational(c))
    }

    /// `n/d`
    pub fn ratio(n: i64, d: i64) -> Self {
        ExtScalar::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn q() -> Self {
        ExtScalar::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        ExtScalar::from(RatFunc::q_pow(e))
    }

    /// The adjoined root `s`.
    pub fn s() -> Self {
        ExtScalar { a: RatFunc::zero(), b: RatFunc::one() }
    }

    /// `2/(q + q^-1)`
    pub fn sigma() -> Self {
        ExtScalar::from(sigma())
    }

    /// Rational part.
    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    /// Coefficient of `s`.
    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The value as an element of `Q(q)` when it has no `s` part.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_ratfunc().and_then(RatFunc::as_rational)
    }

    /// Multiplicative inverse, `(a - b s)/(a^2 - b^2 s^2)`.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.b.is_zero() {
            return Ok(ExtScalar::from(self.a.inv()?));
        }
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * &sigma());
        let n = norm.inv()?;
        Ok(ExtScalar { a: &self.a * &n, b: -(&self.b * &n) })
    }

    pub fn checked_div(&self, rhs: &ExtScalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        if self.b.is_zero() {
            return Ok(ExtScalar::from(self.a.pow(n)?));
        }
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = ExtScalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `q -> 1/q` on both components; `s` is fixed.
    pub fn qconj(&self) -> Self {
        ExtScalar { a: self.a.qconj(), b: self.b.qconj() }
    }

    /// Value at `q = 1` with `s = 1`. Defined when neither component has a pole there.
    pub fn eval_q1(&self) -> Result<Rational, ScalarError> {
        Ok(self.a.eval_q1()? + self.b.eval_q1()?)
    }

    /// Sign and magnitude text when the value is a single signed term of the form
    /// `c q^e` or `c q^e s`; used for compact coefficients.
    pub(crate) fn simple_term(&self) -> Option<(bool, String)> {
        let (c, e, with_s) = match (self.a.is_zero(), self.b.is_zero()) {
            (false, true) => {
                let (c, e) = self.a.as_monomial()?;
                (c, e, false)
            }
            (true, false) => {
                let (c, e) = self.b.as_monomial()?;
                (c, e, true)
            }
            _ => return None,
        };
        let mut out = String::new();
        let mag = c.abs();
        if with_s {
            if !(mag.is_one() && e == 0) {
                write_term(&mut out, &mag, e).ok()?;
                if !(e == 0 && mag.is_integer()) {
                    out.push(' ');
                }
            }
            out.push('s');
        } else {
            write_term(&mut out, &mag, e).ok()?;
        }
        Some((c.is_negative(), out))
    }
}

impl From<RatFunc> for ExtScalar {
    fn from(a: RatFunc) -> Self {
        ExtScalar { a, b: RatFunc::zero() }
    }
}

impl From<Rational> for ExtScalar {
    fn from(c: Rational) -> Self {
        ExtScalar::from_rational(c)
    }
}

impl Add<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return ExtScalar::from(&self.a * &rhs.a);
        }
        let bd = &self.b * &rhs.b;
        let a = &(&self.a * &rhs.a) + &(&bd * &sigma());
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        ExtScalar { a, b }
    }
}

/// Panics on division by zero; use [`ExtScalar::checked_div`] for a checked version.
impl Div<&ExtScalar> for &ExtScalar {
    type Output = ExtScalar;
    fn div(self, rhs: &ExtScalar) -> ExtScalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar { a: -&self.a, b: -&self.b }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

crate::forward_binops!(ExtScalar);

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        ExtScalar::one()
    }
}

impl fmt::Display for ExtScalar {
    /// Canonical text: the rational part, then the `s` part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let s_part = ExtScalar { a: RatFunc::zero(), b: self.b.clone() };
        let simple = s_part.simple_term();
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            match &simple {
                Some((true, t)) => write!(f, " - {t}"),
                Some((false, t)) => write!(f, " + {t}"),
                None => write!(f, " + ({}) s", self.b),
            }
        } else {
            match &simple {
                Some((true, t)) => write!(f, "-{t}"),
                Some((false, t)) => f.write_str(t),
                None => write!(f, "({}) s", self.b),
            }
        }
    }
}
