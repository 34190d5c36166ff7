//! The quantum Lie algebra `(sl2)_h`: embeddings into `U_q(sl2)`, the bracket
//! `[a, b]_h = ad_a(b)`, structure constants, `q`-antisymmetry and the
//! classical limit.

mod embedding;
mod table;
mod vector;

use thiserror::Error;

pub use embedding::Embedding;
pub use table::{
    basis_pairs, check_qantisymmetry, classical_limit, structure_table, AntisymmetryReport,
    ClassicalLimit, ClassicalTable, StructureTable,
};
pub use vector::{qconj_l, Basis, QLieVector};

use crate::frontend::{render_alg_text, render_vector_text};
use crate::pbw::AlgElement;
use crate::scalar::{ExtScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QLieError {
    #[error(
        "closure violation: [{}, {}]_h leaves the span; residual {}",
        render_vector_text(left), render_vector_text(right), render_alg_text(residual)
    )]
    ClosureViolation { left: QLieVector, right: QLieVector, residual: AlgElement },
    #[error("element not in the span of the embedding; residual {}", render_alg_text(residual))]
    NotInSpan { residual: AlgElement },
    #[error("twist coefficients must sum to 1, got {0}")]
    TwistSum(ExtScalar),
    #[error("embedding images are linearly dependent")]
    DependentImages,
    #[error("structure constant ({left}, {right}) component {component} has a pole at q = 1")]
    ClassicalPole { left: Basis, right: Basis, component: Basis },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `[a, b]_h` in the embedding `e`.
pub fn bracket(a: &QLieVector, b: &QLieVector, e: &Embedding) -> Result<QLieVector, QLieError> {
    e.bracket(a, b)
}

pub fn decompose(u: &AlgElement, e: &Embedding) -> Result<QLieVector, QLieError> {
    e.decompose(u)
}

pub fn standard_embedding() -> Embedding {
    Embedding::standard()
}

pub fn twisted_embedding(p: &[ExtScalar]) -> Result<Embedding, QLieError> {
    Embedding::twisted(p)
}
