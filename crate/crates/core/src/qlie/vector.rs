use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::scalar::ExtScalar;

/// The distinguished basis `(X^+_h, X^-_h, H_h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Xp,
    Xm,
    H,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Xp, Basis::Xm, Basis::H];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Basis {
        Basis::ALL[i]
    }

    /// ASCII name used by the parser and JSON documents.
    pub fn name(self) -> &'static str {
        match self {
            Basis::Xp => "Xp_h",
            Basis::Xm => "Xm_h",
            Basis::H => "H_h",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Basis::Xp => "X^+_h",
            Basis::Xm => "X^-_h",
            Basis::H => "H_h",
        }
    }

    pub fn from_name(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.name() == s)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates `(x+, x-, x0)` over `(X^+_h, X^-_h, H_h)`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct QLieVector {
    pub coords: [ExtScalar; 3],
}

impl QLieVector {
    pub fn new(xp: ExtScalar, xm: ExtScalar, h: ExtScalar) -> Self {
        QLieVector { coords: [xp, xm, h] }
    }

    pub fn zero() -> Self {
        QLieVector::default()
    }

    pub fn basis(b: Basis) -> Self {
        let mut v = QLieVector::zero();
        v.coords[b.index()] = ExtScalar::one();
        v
    }

    /// `c * basis`
    pub fn along(b: Basis, c: ExtScalar) -> Self {
        let mut v = QLieVector::zero();
        v.coords[b.index()] = c;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(ExtScalar::is_zero)
    }

    pub fn scale(&self, c: &ExtScalar) -> QLieVector {
        QLieVector { coords: self.coords.clone().map(|x| &x * c) }
    }

    /// Coordinate-wise `q`-conjugation.
    pub fn qconj(&self) -> QLieVector {
        QLieVector { coords: self.coords.clone().map(|x| x.qconj()) }
    }

    /// Nonzero `(basis, coordinate)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (Basis, &ExtScalar)> {
        Basis::ALL
            .into_iter()
            .zip(self.coords.iter())
            .filter(|(_, c)| !c.is_zero())
    }
}

/// Coordinate-wise `q`-conjugation in the distinguished basis.
pub fn qconj_l(v: &QLieVector) -> QLieVector {
    v.qconj()
}

impl Index<Basis> for QLieVector {
    type Output = ExtScalar;
    fn index(&self, b: Basis) -> &ExtScalar {
        &self.coords[b.index()]
    }
}

impl IndexMut<Basis> for QLieVector {
    fn index_mut(&mut self, b: Basis) -> &mut ExtScalar {
        &mut self.coords[b.index()]
    }
}

impl Add<&QLieVector> for &QLieVector {
    type Output = QLieVector;
    fn add(self, rhs: &QLieVector) -> QLieVector {
        QLieVector { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }
}

impl Sub<&QLieVector> for &QLieVector {
    type Output = QLieVector;
    fn sub(self, rhs: &QLieVector) -> QLieVector {
        QLieVector { coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]) }
    }
}

impl Neg for &QLieVector {
    type Output = QLieVector;
    fn neg(self) -> QLieVector {
        QLieVector { coords: self.coords.clone().map(|x| -x) }
    }
}

impl Neg for QLieVector {
    type Output = QLieVector;
    fn neg(self) -> QLieVector {
        -&self
    }
}

crate::forward_binops!(@op QLieVector, Add, add);
crate::forward_binops!(@op QLieVector, Sub, sub);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qconj_examples() {
        let v = QLieVector::along(Basis::Xp, ExtScalar::q());
        assert_eq!(qconj_l(&v), QLieVector::along(Basis::Xp, ExtScalar::q_pow(-1)));
        for b in Basis::ALL {
            assert_eq!(qconj_l(&QLieVector::basis(b)), QLieVector::basis(b));
        }
        let w = QLieVector::new(ExtScalar::q(), ExtScalar::s(), ExtScalar::q_pow(-3));
        assert_eq!(qconj_l(&qconj_l(&w)), w);
    }
}
