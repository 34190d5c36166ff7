use thiserror::Error;

use super::parse::{parse, Expr, ExprKind, Generator, Mode, ParseError, ParseErrorKind, Symbol};
use crate::pbw::AlgElement;
use crate::qlie::QLieVector;
use crate::scalar::{ExtScalar, Rational, ScalarError};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(ExtScalar),
    Alg(AlgElement),
    Vector(QLieVector),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{source} at byte {offset}")]
    Arith { source: ScalarError, offset: usize },
    #[error("expression is a nonzero scalar, expected a quantum Lie vector")]
    ScalarNotVector,
}

impl EvalError {
    /// The input was well formed but exceeded a parser size bound.
    pub fn is_size_limit(&self) -> bool {
        matches!(
            self,
            EvalError::Parse(ParseError {
                kind: ParseErrorKind::TooLarge | ParseErrorKind::ExponentRange | ParseErrorKind::TooDeep,
                ..
            })
        )
    }
}

fn to_alg(v: Value) -> AlgElement {
    match v {
        Value::Scalar(c) => AlgElement::scalar(c),
        Value::Alg(x) => x,
        Value::Vector(_) => unreachable!("sort checking keeps vectors out of algebra mode"),
    }
}

fn combine(a: Value, b: Value, op: fn(&ExtScalar, &ExtScalar) -> ExtScalar, alg: fn(&AlgElement, &AlgElement) -> AlgElement) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(op(&x, &y)),
        (Value::Vector(x), Value::Vector(y)) => {
            Value::Vector(QLieVector { coords: std::array::from_fn(|i| op(&x.coords[i], &y.coords[i])) })
        }
        (a, b) => Value::Alg(alg(&to_alg(a), &to_alg(b))),
    }
}

/// Evaluates a parsed expression exactly.
pub fn eval_ast(e: &Expr) -> Result<Value, EvalError> {
    let arith = |source| EvalError::Arith { source, offset: e.offset };
    Ok(match &e.kind {
        ExprKind::Int(n) => Value::Scalar(ExtScalar::from_rational(Rational::from_integer(n.clone()))),
        ExprKind::Sym(sym) => match sym {
            Symbol::Q => Value::Scalar(ExtScalar::q()),
            Symbol::S => Value::Scalar(ExtScalar::s()),
            Symbol::Gen(g) => Value::Alg(match g {
                Generator::E => AlgElement::e(),
                Generator::F => AlgElement::f(),
                Generator::K => AlgElement::k(),
                Generator::KInv => AlgElement::k_inv(),
            }),
            Symbol::Basis(b) => Value::Vector(QLieVector::basis(*b)),
        },
        ExprKind::Add(a, b) => combine(eval_ast(a)?, eval_ast(b)?, |x, y| x + y, |x, y| x + y),
        ExprKind::Sub(a, b) => combine(eval_ast(a)?, eval_ast(b)?, |x, y| x - y, |x, y| x - y),
        ExprKind::Neg(a) => match eval_ast(a)? {
            Value::Scalar(x) => Value::Scalar(-x),
            Value::Alg(x) => Value::Alg(-x),
            Value::Vector(v) => Value::Vector(-v),
        },
        ExprKind::Mul(a, b) => match (eval_ast(a)?, eval_ast(b)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
            (Value::Scalar(c), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(c)) => Value::Vector(v.scale(&c)),
            (Value::Scalar(c), Value::Alg(x)) | (Value::Alg(x), Value::Scalar(c)) => Value::Alg(x.scale(&c)),
            (a, b) => Value::Alg(&to_alg(a) * &to_alg(b)),
        },
        ExprKind::Div(a, b) => match (eval_ast(a)?, eval_ast(b)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.checked_div(&y).map_err(arith)?),
            _ => unreachable!("parser only builds scalar divisions"),
        },
        ExprKind::Pow(a, n) => match eval_ast(a)? {
            Value::Scalar(x) => Value::Scalar(x.pow(*n).map_err(arith)?),
            Value::Alg(x) => {
                if *n < 0 {
                    // only K and Kinv reach here
                    let inv = if x == AlgElement::k() { AlgElement::k_inv() } else { AlgElement::k() };
                    Value::Alg(inv.pow(n.unsigned_abs() as u32))
                } else {
                    Value::Alg(x.pow(*n as u32))
                }
            }
            Value::Vector(v) => Value::Vector(v),
        },
    })
}

/// Parses and evaluates `text`; the returned value always matches `mode`.
pub fn eval_str(text: &str, mode: Mode) -> Result<Value, EvalError> {
    let v = eval_ast(&parse(text, mode)?)?;
    Ok(match (mode, v) {
        (Mode::Algebra, v) => Value::Alg(to_alg(v)),
        (Mode::QLie, Value::Scalar(c)) if c.is_zero() => Value::Vector(QLieVector::zero()),
        (Mode::QLie, Value::Scalar(_)) => return Err(EvalError::ScalarNotVector),
        (_, v) => v,
    })
}

pub fn parse_scalar(text: &str) -> Result<ExtScalar, EvalError> {
    match eval_str(text, Mode::Scalar)? {
        Value::Scalar(x) => Ok(x),
        _ => unreachable!(),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgElement, EvalError> {
    match eval_str(text, Mode::Algebra)? {
        Value::Alg(x) => Ok(x),
        _ => unreachable!(),
    }
}

pub fn parse_vector(text: &str) -> Result<QLieVector, EvalError> {
    match eval_str(text, Mode::QLie)? {
        Value::Vector(v) => Ok(v),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::Monomial;
    use crate::qlie::{Basis, Embedding};

    #[test]
    fn ef_commutator() {
        let x = parse_algebra("E F - F E").unwrap();
        let t = (&ExtScalar::q() - &ExtScalar::q_pow(-1)).inv().unwrap();
        let expected: AlgElement =
            [(Monomial::new(0, 2, 0), t.clone()), (Monomial::new(0, -2, 0), -t)].into_iter().collect();
        assert_eq!(x, expected);
    }

    #[test]
    fn h_image_from_text() {
        let x = parse_algebra("2/(q + q^-1) (q X+ X- - q^-1 X- X+)").unwrap();
        assert_eq!(&x, Embedding::standard().image(Basis::H));
    }

    #[test]
    fn zero_in_every_mode() {
        assert_eq!(parse_scalar("0").unwrap(), ExtScalar::zero());
        assert!(parse_algebra("0").unwrap().is_zero());
        assert!(parse_vector("0").unwrap().is_zero());
        assert_eq!(parse_vector("2").unwrap_err(), EvalError::ScalarNotVector);
    }

    #[test]
    fn k_powers() {
        assert_eq!(parse_algebra("K^-2").unwrap(), AlgElement::k_pow(-2));
        assert_eq!(parse_algebra("Kinv^-2").unwrap(), AlgElement::k_pow(2));
        assert_eq!(parse_algebra("K Kinv").unwrap(), AlgElement::one());
    }

    #[test]
    fn division_by_zero_reports_offset() {
        let e = parse_scalar("1/(q - q)").unwrap_err();
        assert_eq!(e, EvalError::Arith { source: ScalarError::DivisionByZero, offset: 1 });
    }

    #[test]
    fn vectors() {
        let v = parse_vector("2q * Xp_h - s H_h").unwrap();
        assert_eq!(v[Basis::Xp], &ExtScalar::from_int(2) * &ExtScalar::q());
        assert_eq!(v[Basis::H], -ExtScalar::s());
    }
}
