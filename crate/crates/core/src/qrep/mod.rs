//! Matrix representations of `(sl2)_h` realized through the `q`-commutator
//! `pi(a) pi(b) - (pi~(b) pi~(a))~`, where `~` is a `q`-linear involution on
//! matrices fixed by its values on the matrix units.

mod matrix;

use thiserror::Error;

pub use matrix::RepMatrix;

use crate::qlie::{basis_pairs, Basis, QLieVector, StructureTable};
use crate::scalar::{ExtScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix conjugation needs {expected} unit images, got {got}")]
    MissingUnits { expected: usize, got: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `q`-conjugation on `n x n` matrices, given by the images of the matrix
/// units `E_ij` and extended by `(c M)~ = c~ M~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatConjugation {
    n: usize,
    /// Row-major: `images[i * n + j]` is the image of `E_ij` (0-based).
    images: Vec<RepMatrix>,
}

impl MatConjugation {
    pub fn new(n: usize, images: Vec<RepMatrix>) -> Result<Self, RepError> {
        if images.len() != n * n {
            return Err(RepError::MissingUnits { expected: n * n, got: images.len() });
        }
        if let Some(m) = images.iter().find(|m| m.dim() != n) {
            return Err(RepError::DimensionMismatch { expected: n, got: m.dim() });
        }
        Ok(MatConjugation { n, images })
    }

    /// Every unit fixed: entry-wise `q`-conjugation.
    pub fn identity(n: usize) -> Self {
        let images = (0..n * n).map(|k| RepMatrix::unit(n, k / n, k % n)).collect();
        MatConjugation { n, images }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Image of `E_ij` (0-based).
    pub fn unit_image(&self, i: usize, j: usize) -> &RepMatrix {
        &self.images[i * self.n + j]
    }

    pub fn apply(&self, m: &RepMatrix) -> Result<RepMatrix, RepError> {
        mat_qconj(m, self)
    }

    /// Evaluates every image at `q = 1`.
    pub fn eval_q1(&self) -> Result<MatConjugation, ScalarError> {
        let images = self.images.iter().map(RepMatrix::eval_q1).collect::<Result<_, _>>()?;
        Ok(MatConjugation { n: self.n, images })
    }
}

/// `M~ = sum_ij (M_ij)~ (E_ij)~`
pub fn mat_qconj(m: &RepMatrix, c: &MatConjugation) -> Result<RepMatrix, RepError> {
    if m.dim() != c.n {
        return Err(RepError::DimensionMismatch { expected: c.n, got: m.dim() });
    }
    let mut out = RepMatrix::zero(c.n);
    for i in 0..c.n {
        for j in 0..c.n {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            out = &out + &c.unit_image(i, j).scale(&x.qconj());
        }
    }
    Ok(out)
}

/// `A B - (B~ A~)~`
pub fn qcommutator(a: &RepMatrix, b: &RepMatrix, c: &MatConjugation) -> Result<RepMatrix, RepError> {
    if a.dim() != b.dim() {
        return Err(RepError::DimensionMismatch { expected: a.dim(), got: b.dim() });
    }
    let inner = &mat_qconj(b, c)? * &mat_qconj(a, c)?;
    Ok(&(a * b) - &mat_qconj(&inner, c)?)
}

/// Images of `X^+_h, X^-_h, H_h` together with a matrix conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    pi: [RepMatrix; 3],
    conj: MatConjugation,
}

impl Representation {
    pub fn new(pi: [RepMatrix; 3], conj: MatConjugation) -> Result<Self, RepError> {
        let n = conj.dim();
        if let Some(m) = pi.iter().find(|m| m.dim() != n) {
            return Err(RepError::DimensionMismatch { expected: n, got: m.dim() });
        }
        Ok(Representation { n, pi, conj })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn pi_basis(&self, b: Basis) -> &RepMatrix {
        &self.pi[b.index()]
    }

    pub fn set_pi_basis(&mut self, b: Basis, m: RepMatrix) -> Result<(), RepError> {
        if m.dim() != self.n {
            return Err(RepError::DimensionMismatch { expected: self.n, got: m.dim() });
        }
        self.pi[b.index()] = m;
        Ok(())
    }

    pub fn conj(&self) -> &MatConjugation {
        &self.conj
    }

    /// `pi(v) = sum_i v_i pi(basis_i)`
    pub fn pi(&self, v: &QLieVector) -> RepMatrix {
        v.terms()
            .fold(RepMatrix::zero(self.n), |acc, (b, c)| &acc + &self.pi_basis(b).scale(c))
    }

    /// `pi~(v) = pi(v~)`
    pub fn pi_tilde(&self, v: &QLieVector) -> RepMatrix {
        self.pi(&v.qconj())
    }

    /// The `q`-commutator of `pi(a)` and `pi(b)` for arbitrary vectors.
    pub fn qcommutator_of(&self, a: &QLieVector, b: &QLieVector) -> RepMatrix {
        let inner = &self.pi_tilde(b) * &self.pi_tilde(a);
        let conj = mat_qconj(&inner, &self.conj).expect("dimensions agree by construction");
        &(&self.pi(a) * &self.pi(b)) - &conj
    }

    /// Entries and conjugation evaluated at `q = 1`.
    pub fn eval_q1(&self) -> Result<Representation, ScalarError> {
        let pi = [self.pi[0].eval_q1()?, self.pi[1].eval_q1()?, self.pi[2].eval_q1()?];
        Ok(Representation { n: self.n, pi, conj: self.conj.eval_q1()? })
    }
}

/// The 2-dimensional representation:
/// `pi(X^+_h) = sqrt((q + q^-1)/2) E_12`, `pi(X^-_h) = pi(X^+_h)^t`,
/// `pi(H_h) = diag(q, -q^-1)`, with
/// `E_11~ = diag(2q, q - q^-1)/(q + q^-1)`, `E_22~ = diag(q^-1 - q, 2q^-1)/(q + q^-1)`
/// and the off-diagonal units fixed.
pub fn builtin_rep2() -> Representation {
    let q = ExtScalar::q();
    let qi = ExtScalar::q_pow(-1);
    let qsum = &q + &qi;
    let qdiff = &q - &qi;
    // sqrt((q + q^-1)/2) = s (q + q^-1)/2
    let root = &(&ExtScalar::s() * &qsum) * &ExtScalar::ratio(1, 2);
    let xp = RepMatrix::unit(2, 0, 1).scale(&root);
    let xm = xp.transpose();
    let h = RepMatrix::diag(&[q.clone(), -&qi]);
    let inv = qsum.inv().expect("nonzero");
    let two = ExtScalar::from_int(2);
    let e11 = RepMatrix::diag(&[&two * &q, qdiff.clone()]).scale(&inv);
    let e22 = RepMatrix::diag(&[-&qdiff, &two * &qi]).scale(&inv);
    let conj = MatConjugation {
        n: 2,
        images: vec![e11, RepMatrix::unit(2, 0, 1), RepMatrix::unit(2, 1, 0), e22],
    };
    Representation { n: 2, pi: [xp, xm, h], conj }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairCheck {
    pub left: Basis,
    pub right: Basis,
    /// `q`-commutator of the basis images.
    pub qcommutator: RepMatrix,
    /// `pi` of the structure-table entry.
    pub expected: RepMatrix,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepReport {
    pub pairs: Vec<PairCheck>,
    /// `(i, j, pass)` for `(E_ij~)~ = E_ij`, 0-based.
    pub involution: Vec<(usize, usize, bool)>,
    /// `(i, j, pass)` for `(c E_ij)~ = c~ E_ij~` and additivity with a
    /// neighbouring unit, for sample scalars `c`.
    pub q_linearity: Vec<(usize, usize, bool)>,
    /// `pi(b)~ = pi(b~)` on the basis.
    pub compatibility: Vec<(Basis, bool)>,
}

impl RepReport {
    pub fn pass(&self) -> bool {
        self.pairs.iter().all(|p| p.pass)
            && self.involution.iter().all(|x| x.2)
            && self.q_linearity.iter().all(|x| x.2)
            && self.compatibility.iter().all(|x| x.1)
    }

    pub fn failing_pairs(&self) -> Vec<(Basis, Basis)> {
        self.pairs.iter().filter(|p| !p.pass).map(|p| (p.left, p.right)).collect()
    }
}

/// Checks every `q`-commutator of basis images against the structure table,
/// plus the involution, `q`-linearity and compatibility of the conjugation.
pub fn verify_representation(r: &Representation, t: &StructureTable) -> RepReport {
    let n = r.n;
    let pairs = basis_pairs()
        .map(|(a, b)| {
            let qc = r.qcommutator_of(&QLieVector::basis(a), &QLieVector::basis(b));
            let expected = r.pi(t.entry(a, b));
            let pass = qc == expected;
            PairCheck { left: a, right: b, qcommutator: qc, expected, pass }
        })
        .collect();
    let mut involution = Vec::new();
    let mut q_linearity = Vec::new();
    let samples = [ExtScalar::q(), &ExtScalar::q_pow(-2) + &ExtScalar::s()];
    for i in 0..n {
        for j in 0..n {
            let unit = RepMatrix::unit(n, i, j);
            let once = mat_qconj(&unit, &r.conj).expect("dimension");
            let twice = mat_qconj(&once, &r.conj).expect("dimension");
            involution.push((i, j, twice == unit));

            let other = RepMatrix::unit(n, (i + 1) % n, j);
            let other_img = mat_qconj(&other, &r.conj).expect("dimension");
            let linear = samples.iter().all(|c| {
                let m = &unit.scale(c) + &other;
                let lhs = mat_qconj(&m, &r.conj).expect("dimension");
                let rhs = &once.scale(&c.qconj()) + &other_img;
                lhs == rhs
            });
            q_linearity.push((i, j, linear));
        }
    }
    let compatibility = Basis::ALL
        .into_iter()
        .map(|b| {
            let v = QLieVector::basis(b);
            let lhs = mat_qconj(&r.pi(&v), &r.conj).expect("dimension");
            (b, lhs == r.pi_tilde(&v))
        })
        .collect();
    RepReport { pairs, involution, q_linearity, compatibility }
}
