use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use super::embedding::Embedding;
use super::vector::{Basis, QLieVector};
use super::QLieError;
use crate::scalar::{ExtScalar, Rational, ScalarError};

/// `entries[i][j] = [basis_i, basis_j]_h`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StructureTable {
    pub entries: [[QLieVector; 3]; 3],
}

impl StructureTable {
    pub fn entry(&self, a: Basis, b: Basis) -> &QLieVector {
        &self.entries[a.index()][b.index()]
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, a: &QLieVector, b: &QLieVector) -> QLieVector {
        let mut out = QLieVector::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out = &out + &self.entry(i, j).scale(&(x * y));
            }
        }
        out
    }

    /// Golden structure constants of the abstract algebra `(sl2)_h`.
    pub fn quantum_sl2() -> StructureTable {
        let q = ExtScalar::q();
        let qi = ExtScalar::q_pow(-1);
        let two = ExtScalar::from_int(2);
        let mut t = StructureTable::default();
        let mut set = |a: Basis, b: Basis, v: QLieVector| t.entries[a.index()][b.index()] = v;
        set(Basis::Xp, Basis::Xm, QLieVector::basis(Basis::H));
        set(Basis::Xm, Basis::Xp, QLieVector::along(Basis::H, ExtScalar::from_int(-1)));
        set(Basis::H, Basis::Xp, QLieVector::along(Basis::Xp, &two * &q));
        set(Basis::H, Basis::Xm, QLieVector::along(Basis::Xm, -(&two * &qi)));
        set(Basis::Xp, Basis::H, QLieVector::along(Basis::Xp, -(&two * &qi)));
        set(Basis::Xm, Basis::H, QLieVector::along(Basis::Xm, &two * &q));
        set(Basis::H, Basis::H, QLieVector::along(Basis::H, &two * &(&q - &qi)));
        t
    }

    /// Structure constants of classical `sl2`: `[X^+,X^-] = H`, `[H,X^±] = ±2X^±`.
    pub fn classical_sl2() -> StructureTable {
        let two = ExtScalar::from_int(2);
        let mut t = StructureTable::default();
        let mut set = |a: Basis, b: Basis, v: QLieVector| t.entries[a.index()][b.index()] = v;
        set(Basis::Xp, Basis::Xm, QLieVector::basis(Basis::H));
        set(Basis::Xm, Basis::Xp, QLieVector::along(Basis::H, ExtScalar::from_int(-1)));
        set(Basis::H, Basis::Xp, QLieVector::along(Basis::Xp, two.clone()));
        set(Basis::H, Basis::Xm, QLieVector::along(Basis::Xm, -&two));
        set(Basis::Xp, Basis::H, QLieVector::along(Basis::Xp, -&two));
        set(Basis::Xm, Basis::H, QLieVector::along(Basis::Xm, two));
        t
    }

    /// `(i, j)` pairs where the two tables differ.
    pub fn diff(&self, other: &StructureTable) -> Vec<(Basis, Basis)> {
        basis_pairs().filter(|&(a, b)| self.entry(a, b) != other.entry(a, b)).collect()
    }
}

/// All nine ordered basis pairs in row-major order.
pub fn basis_pairs() -> impl Iterator<Item = (Basis, Basis)> {
    Basis::ALL.into_iter().flat_map(|a| Basis::ALL.into_iter().map(move |b| (a, b)))
}

/// All nine brackets of basis elements, evaluated in parallel.
pub fn structure_table(e: &Embedding) -> Result<StructureTable, QLieError> {
    let pairs: Vec<_> = basis_pairs().collect();
    let results: Vec<Result<QLieVector, QLieError>> = pairs
        .par_iter()
        .map(|&(a, b)| e.bracket(&QLieVector::basis(a), &QLieVector::basis(b)))
        .collect();
    let mut t = StructureTable::default();
    for ((a, b), r) in pairs.into_iter().zip(results) {
        t.entries[a.index()][b.index()] = r?;
    }
    Ok(t)
}

/// Both sides of `[a,b]_h~ = -[b~, a~]_h`.
#[derive(Clone, Debug, PartialEq)]
pub struct AntisymmetryReport {
    pub left: QLieVector,
    pub right: QLieVector,
    pub pass: bool,
}

pub fn check_qantisymmetry(
    a: &QLieVector,
    b: &QLieVector,
    e: &Embedding,
) -> Result<AntisymmetryReport, QLieError> {
    let left = e.bracket(a, b)?.qconj();
    let right = -e.bracket(&b.qconj(), &a.qconj())?;
    let pass = left == right;
    Ok(AntisymmetryReport { left, right, pass })
}

/// Rational structure constants at `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTable {
    pub entries: [[[Rational; 3]; 3]; 3],
}

impl ClassicalTable {
    pub fn bracket(&self, a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
        let mut out: [Rational; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let c = &a[i] * &b[j];
                if c.is_zero() {
                    continue;
                }
                for k in 0..3 {
                    out[k] += &c * &self.entries[i][j][k];
                }
            }
        }
        out
    }

    pub fn to_table(&self) -> StructureTable {
        let mut t = StructureTable::default();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t.entries[i][j] = QLieVector { coords: v.clone().map(ExtScalar::from_rational) };
            }
        }
        t
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalLimit {
    pub table: ClassicalTable,
    /// `[a,b] = -[b,a]` on all basis pairs.
    pub antisymmetric: bool,
    /// `[a,[b,c]] = [[a,b],c] + [b,[a,c]]` on all basis triples.
    pub jacobi: bool,
    /// Equality with the classical `sl2` table.
    pub matches_sl2: bool,
}

impl ClassicalLimit {
    pub fn pass(&self) -> bool {
        self.antisymmetric && self.jacobi && self.matches_sl2
    }
}

/// Evaluates every structure constant at `q = 1` and validates the result as a Lie algebra.
pub fn classical_limit(t: &StructureTable) -> Result<ClassicalLimit, QLieError> {
    let mut entries: [[[Rational; 3]; 3]; 3] = Default::default();
    for (a, b) in basis_pairs() {
        for k in Basis::ALL {
            let c = &t.entry(a, b)[k];
            entries[a.index()][b.index()][k.index()] = c.eval_q1().map_err(|err| match err {
                ScalarError::PoleAtQ1 => QLieError::ClassicalPole { left: a, right: b, component: k },
                other => QLieError::Scalar(other),
            })?;
        }
    }
    let table = ClassicalTable { entries };
    let unit = |i: usize| -> [Rational; 3] {
        let mut v: [Rational; 3] = Default::default();
        v[i] = Rational::from_integer(1.into());
        v
    };
    let neg = |v: [Rational; 3]| v.map(|x| -x);
    let add = |x: [Rational; 3], y: [Rational; 3]| -> [Rational; 3] {
        std::array::from_fn(|k| &x[k] + &y[k])
    };
    let antisymmetric = (0..3).all(|i| (0..3).all(|j| table.entries[i][j] == neg(table.entries[j][i].clone())));
    let jacobi = (0..3).all(|i| {
        (0..3).all(|j| {
            (0..3).all(|k| {
                let (a, b, c) = (unit(i), unit(j), unit(k));
                let lhs = table.bracket(&a, &table.bracket(&b, &c));
                let rhs = add(
                    table.bracket(&table.bracket(&a, &b), &c),
                    table.bracket(&b, &table.bracket(&a, &c)),
                );
                lhs == rhs
            })
        })
    });
    let matches_sl2 = table.to_table() == StructureTable::classical_sl2();
    Ok(ClassicalLimit { table, antisymmetric, jacobi, matches_sl2 })
}

impl fmt::Display for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in basis_pairs() {
            writeln!(f, "[{a}, {b}]_h = {}", crate::frontend::render_vector_text(self.entry(a, b)))?;
        }
        Ok(())
    }
}
