//! Exact coefficient arithmetic: rationals, rational functions in `q`, the
//! root `s` of `2/(q + q^-1)`, `q`-conjugation, and the `h`-series view.

mod ext;
mod poly;
mod ratfunc;
mod series;

use thiserror::Error;

pub use ext::ExtScalar;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::{h_series, HSeries};


/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("classical limit undefined for this scalar (pole at q = 1)")]
    PoleAtQ1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &ExtScalar, y: &ExtScalar, op: ArithOp) -> Result<ExtScalar, ScalarError> {
    match op {
        ArithOp::Add => Ok(x + y),
        ArithOp::Sub => Ok(x - y),
        ArithOp::Mul => Ok(x * y),
        ArithOp::Div => x.checked_div(y),
    }
}
