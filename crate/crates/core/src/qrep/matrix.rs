use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{ExtScalar, ScalarError};

/// Square matrix over [`ExtScalar`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMatrix {
    n: usize,
    entries: Vec<ExtScalar>,
}

impl RepMatrix {
    pub fn zero(n: usize) -> Self {
        RepMatrix { n, entries: vec![ExtScalar::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RepMatrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = ExtScalar::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = RepMatrix::zero(n);
        m.entries[i * n + j] = ExtScalar::one();
        m
    }

    pub fn diag(d: &[ExtScalar]) -> Self {
        let n = d.len();
        let mut m = RepMatrix::zero(n);
        for (i, x) in d.iter().enumerate() {
            m.entries[i * n + i] = x.clone();
        }
        m
    }

    /// Builds from rows; `None` unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<ExtScalar>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(RepMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: ExtScalar) {
        self.entries[i * self.n + j] = x;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExtScalar]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExtScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        RepMatrix { n, entries: (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect() }
    }

    pub fn scale(&self, c: &ExtScalar) -> Self {
        RepMatrix { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn map(&self, f: impl Fn(&ExtScalar) -> ExtScalar) -> Self {
        RepMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn eval_q1(&self) -> Result<Self, ScalarError> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.eval_q1().map(ExtScalar::from_rational))
            .collect::<Result<_, _>>()?;
        Ok(RepMatrix { n: self.n, entries })
    }
}

// Arithmetic assumes equal dimensions; mismatches are caught at the API boundary.

impl Add<&RepMatrix> for &RepMatrix {
    type Output = RepMatrix;
    fn add(self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.n, rhs.n);
        RepMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&RepMatrix> for &RepMatrix {
    type Output = RepMatrix;
    fn sub(self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.n, rhs.n);
        RepMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Mul<&RepMatrix> for &RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = RepMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Neg for &RepMatrix {
    type Output = RepMatrix;
    fn neg(self) -> RepMatrix {
        self.map(|x| -x)
    }
}

crate::forward_binops!(@op RepMatrix, Add, add);
crate::forward_binops!(@op RepMatrix, Sub, sub);
crate::forward_binops!(@op RepMatrix, Mul, mul);
