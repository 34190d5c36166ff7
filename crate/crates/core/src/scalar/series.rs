//! Truncated power series in `h`, the view of scalars under `q = e^h`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ext::{sigma, ExtScalar};
use super::ratfunc::RatFunc;
use super::{Rational, ScalarError};

/// `sum_k c_k h^k + O(h^(order+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = HSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        HSeries { coeffs }
    }

    /// `e^(k h)`
    pub fn exp_multiple(k: i64, order: usize) -> Self {
        let k = Rational::from_integer(BigInt::from(k));
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for j in 0..=order {
            if j > 0 {
                term = term * &k / Rational::from_integer(BigInt::from(j));
            }
            coeffs.push(term.clone());
        }
        HSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        HSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn common_order(&self, other: &HSeries) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &HSeries) -> HSeries {
        let n = self.common_order(other);
        HSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &HSeries) -> HSeries {
        let n = self.common_order(other);
        HSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    pub fn scale(&self, c: &Rational) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &HSeries) -> HSeries {
        let n = self.common_order(other);
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &other.coeffs[k - i])
            })
            .collect();
        HSeries { coeffs }
    }

    /// Reciprocal; requires a nonzero constant term.
    pub fn recip(&self) -> Result<HSeries, ScalarError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(ScalarError::PoleAtQ1);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = vec![inv0.clone()];
        for k in 1..=self.order() {
            let acc = (1..=k).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &out[k - i]);
            out.push(-acc * &inv0);
        }
        Ok(HSeries { coeffs: out })
    }

    /// Square root with constant term `1`; requires `c_0 = 1`.
    pub fn sqrt_unit(&self) -> HSeries {
        assert!(self.coeffs[0].is_one(), "sqrt_unit needs constant term 1");
        let two = Rational::from_integer(2.into());
        let mut out: Vec<Rational> = vec![Rational::one()];
        for k in 1..=self.order() {
            let cross = (1..k).fold(Rational::zero(), |acc, i| acc + &out[i] * &out[k - i]);
            out.push((&self.coeffs[k] - cross) / &two);
        }
        HSeries { coeffs: out }
    }

    /// Series of `sum_e c_e q^e` with `q = e^h`.
    fn of_laurent(terms: &[(i64, Rational)], order: usize) -> HSeries {
        terms.iter().fold(HSeries::zero(order), |acc, (e, c)| {
            acc.add(&HSeries::exp_multiple(*e, order).scale(c))
        })
    }

    /// Series of a rational function in `q`; errors on a pole at `h = 0`.
    pub fn of_ratfunc(x: &RatFunc, order: usize) -> Result<HSeries, ScalarError> {
        let num = HSeries::of_laurent(&x.numerator_terms(), order);
        if x.is_laurent() {
            return Ok(num);
        }
        let den_terms: Vec<_> = x
            .denominator()
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.clone()))
            .collect();
        let den = HSeries::of_laurent(&den_terms, order);
        Ok(num.mul(&den.recip()?))
    }

    /// Series of `s = (2/(e^h + e^-h))^(1/2)`, positive branch.
    pub fn of_s(order: usize) -> HSeries {
        HSeries::of_ratfunc(&sigma(), order)
            .expect("sigma is regular at h = 0")
            .sqrt_unit()
    }
}

/// Power series in `h` of `x` truncated after `h^order`.
pub fn h_series(x: &ExtScalar, order: usize) -> Result<HSeries, ScalarError> {
    let a = HSeries::of_ratfunc(x.a(), order)?;
    if x.b().is_zero() {
        return Ok(a);
    }
    let b = HSeries::of_ratfunc(x.b(), order)?;
    Ok(a.add(&b.mul(&HSeries::of_s(order))))
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_integer() {
                        write!(f, "{mag} ")?;
                    } else if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("h")?;
                    } else {
                        write!(f, "h^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}
