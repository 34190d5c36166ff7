//! Precedence-climbing parser for scalar, algebra and quantum-Lie expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ('+' | '-')? INT | '(' ('+' | '-')? INT ')'
//! primary := INT | SYMBOL | '(' expr ')'
//! ```
//!
//! Symbols: `q`, `s`; generators `E`/`X+`, `F`/`X-`, `K`, `Kinv`; quantum
//! basis `Xp_h`, `Xm_h`, `H_h`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::qlie::Basis;

/// Nesting limit for parentheses and unary operators.
pub const MAX_DEPTH: usize = 128;
/// Largest exponent magnitude on scalars and on single generators.
pub const MAX_EXPONENT: i64 = 256;
/// Largest exponent on compound algebra expressions.
pub const MAX_ALGEBRA_EXPONENT: i64 = 8;
/// Bound on the degree in `q` and `s`.
pub const MAX_DEGREE: u64 = 256;
/// Bound on the degree in the generators.
pub const MAX_ALGEBRA_DEGREE: u64 = 12;
/// Bound on the bit size of integers built from literals.
pub const MAX_BITS: u64 = 8192;
/// Longest accepted input, in tokens.
pub const MAX_TOKENS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Algebra,
    #[value(name = "qlie")]
    QLie,
    Scalar,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Algebra => "algebra",
            Mode::QLie => "qlie",
            Mode::Scalar => "scalar",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Q,
    S,
    Gen(Generator),
    Basis(Basis),
}

impl Symbol {
    fn lookup(name: &str) -> Option<Symbol> {
        Some(match name {
            "q" => Symbol::Q,
            "s" => Symbol::S,
            "E" | "X+" => Symbol::Gen(Generator::E),
            "F" | "X-" => Symbol::Gen(Generator::F),
            "K" => Symbol::Gen(Generator::K),
            "Kinv" => Symbol::Gen(Generator::KInv),
            _ => Symbol::Basis(Basis::from_name(name)?),
        })
    }

    fn sort(self) -> Sort {
        match self {
            Symbol::Q | Symbol::S => Sort::Scalar,
            Symbol::Gen(_) => Sort::Algebra,
            Symbol::Basis(_) => Sort::Vector,
        }
    }
}

/// What an expression denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    Scalar,
    Algebra,
    Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Sym(Symbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Neg(Box<Expr>),
}

/// Parsed expression; `offset` is the byte position of the node's operator or first token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub sort: Sort,
    pub offset: usize,
    pub cost: Cost,
}

/// Upper bounds on the size of an expression's value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cost {
    pub degree: u64,
    pub gens: u64,
    pub bits: u64,
}

impl Cost {
    fn sum(self, o: Cost) -> Cost {
        Cost {
            degree: self.degree.max(o.degree),
            gens: self.gens.max(o.gens),
            bits: self.bits.max(o.bits).saturating_add(1),
        }
    }

    fn product(self, o: Cost) -> Cost {
        Cost {
            degree: self.degree.saturating_add(o.degree),
            gens: self.gens.saturating_add(o.gens),
            bits: self.bits.saturating_add(o.bits),
        }
    }

    fn power(self, n: i64) -> Cost {
        let n = n.unsigned_abs();
        Cost {
            degree: self.degree.saturating_mul(n),
            gens: self.gens.saturating_mul(n),
            bits: self.bits.saturating_mul(n),
        }
    }

    fn within_bounds(self) -> bool {
        self.degree <= MAX_DEGREE && self.gens <= MAX_ALGEBRA_DEGREE && self.bits <= MAX_BITS
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken { found: String, expected: &'static str },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("symbol {symbol:?} is not allowed in {mode} mode")]
    WrongMode { symbol: String, mode: Mode },
    #[error("division of algebra elements; only scalars can be divided")]
    AlgebraDivision,
    #[error("negative powers are only allowed on scalars and K")]
    NegativePower,
    #[error("exponent out of range")]
    ExponentRange,
    #[error("quantum Lie basis elements cannot be multiplied; use a bracket")]
    VectorProduct,
    #[error("cannot add a scalar to a quantum Lie vector")]
    MixedSum,
    #[error("nesting too deep")]
    TooDeep,
    #[error("expression too large")]
    TooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "symbol {s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, start));
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let mut name = text[start..i].to_string();
            // X+ and X- are single symbols
            if name == "X" && i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                name.push(bytes[i] as char);
                i += 1;
            }
            out.push((Tok::Ident(name), start));
        } else {
            let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
            return Err(ParseError { kind: ParseErrorKind::UnexpectedChar(ch), offset: start });
        }
        if out.len() > MAX_TOKENS {
            return Err(ParseError { kind: ParseErrorKind::TooLarge, offset: start });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    mode: Mode,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

fn err<T>(kind: ParseErrorKind, offset: usize) -> PResult<T> {
    Err(ParseError { kind, offset })
}

/// Nested powers make exact arithmetic exponentially expensive.
fn check_size(e: &Expr) -> PResult<()> {
    if !e.cost.within_bounds() {
        return err(ParseErrorKind::TooLarge, e.offset);
    }
    Ok(())
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(ParseErrorKind::TooDeep, self.offset());
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek().cloned() {
            let offset = self.offset();
            self.bump();
            let rhs = self.term()?;
            let sort = self.sum_sort(&lhs, &rhs, offset)?;
            let cost = lhs.cost.sum(rhs.cost);
            let kind = match op {
                Tok::Plus => ExprKind::Add(Box::new(lhs), Box::new(rhs)),
                _ => ExprKind::Sub(Box::new(lhs), Box::new(rhs)),
            };
            lhs = Expr { kind, sort, offset, cost };
            check_size(&lhs)?;
        }
        Ok(lhs)
    }

    fn sum_sort(&self, a: &Expr, b: &Expr, offset: usize) -> PResult<Sort> {
        use Sort::*;
        match (a.sort, b.sort) {
            (Vector, Scalar) | (Scalar, Vector) => err(ParseErrorKind::MixedSum, offset),
            (x, y) if x == y => Ok(x),
            (Algebra, _) | (_, Algebra) => Ok(Algebra),
            _ => Ok(Vector),
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let offset = self.offset();
            let div = match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    false
                }
                Some(Tok::Slash) => {
                    self.bump();
                    true
                }
                _ if self.starts_primary() => false,
                _ => break,
            };
            let rhs = self.unary()?;
            let cost = lhs.cost.product(rhs.cost);
            let kind;
            let sort;
            if div {
                if lhs.sort != Sort::Scalar || rhs.sort != Sort::Scalar {
                    return err(ParseErrorKind::AlgebraDivision, offset);
                }
                sort = Sort::Scalar;
                kind = ExprKind::Div(Box::new(lhs), Box::new(rhs));
            } else {
                sort = match (lhs.sort, rhs.sort) {
                    (Sort::Vector, Sort::Vector) => return err(ParseErrorKind::VectorProduct, offset),
                    (Sort::Vector, _) | (_, Sort::Vector) => Sort::Vector,
                    (Sort::Algebra, _) | (_, Sort::Algebra) => Sort::Algebra,
                    _ => Sort::Scalar,
                };
                kind = ExprKind::Mul(Box::new(lhs), Box::new(rhs));
            }
            lhs = Expr { kind, sort, offset, cost };
            check_size(&lhs)?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if let Some(Tok::Minus) = self.peek() {
            let offset = self.offset();
            self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            let (sort, cost) = (inner.sort, inner.cost);
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), sort, offset, cost });
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            let offset = self.offset();
            self.bump();
            let n = self.exponent()?;
            let is_k = matches!(
                base.kind,
                ExprKind::Sym(Symbol::Gen(Generator::K | Generator::KInv))
            );
            let single_gen = matches!(base.kind, ExprKind::Sym(Symbol::Gen(_)));
            match base.sort {
                Sort::Vector if n != 1 => return err(ParseErrorKind::VectorProduct, offset),
                Sort::Algebra if n < 0 && !is_k => return err(ParseErrorKind::NegativePower, offset),
                Sort::Algebra if !single_gen && n > MAX_ALGEBRA_EXPONENT => {
                    return err(ParseErrorKind::ExponentRange, offset)
                }
                _ => {}
            }
            let sort = base.sort;
            let cost = base.cost.power(n);
            let e = Expr { kind: ExprKind::Pow(Box::new(base), n), sort, offset, cost };
            check_size(&e)?;
            return Ok(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> PResult<i64> {
        let paren = matches!(self.peek(), Some(Tok::LParen));
        if paren {
            self.bump();
        }
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let offset = self.offset();
        let n = match self.bump() {
            Some((Tok::Int(n), _)) => n,
            Some((t, o)) => {
                return err(ParseErrorKind::UnexpectedToken { found: t.to_string(), expected: "integer exponent" }, o)
            }
            None => return err(ParseErrorKind::UnexpectedEnd("integer exponent"), self.end),
        };
        let n: i64 = match i64::try_from(n) {
            Ok(v) if v <= MAX_EXPONENT => v * sign,
            _ => return err(ParseErrorKind::ExponentRange, offset),
        };
        if paren {
            self.expect_rparen()?;
        }
        Ok(n)
    }

    fn expect_rparen(&mut self) -> PResult<()> {
        match self.bump() {
            Some((Tok::RParen, _)) => Ok(()),
            Some((t, o)) => err(ParseErrorKind::UnexpectedToken { found: t.to_string(), expected: "')'" }, o),
            None => err(ParseErrorKind::UnexpectedEnd("')'"), self.end),
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        match self.bump() {
            Some((Tok::Int(n), offset)) => {
                let cost = Cost { bits: n.bits(), ..Cost::default() };
                let e = Expr { kind: ExprKind::Int(n), sort: Sort::Scalar, offset, cost };
                check_size(&e)?;
                Ok(e)
            }
            Some((Tok::Ident(name), offset)) => {
                let Some(sym) = Symbol::lookup(&name) else {
                    return err(ParseErrorKind::UnknownSymbol(name), offset);
                };
                let allowed = match (self.mode, sym.sort()) {
                    (_, Sort::Scalar) => true,
                    (Mode::Algebra, Sort::Algebra) | (Mode::QLie, Sort::Vector) => true,
                    _ => false,
                };
                if !allowed {
                    return err(ParseErrorKind::WrongMode { symbol: name, mode: self.mode }, offset);
                }
                let cost = match sym.sort() {
                    Sort::Scalar => Cost { degree: 1, ..Cost::default() },
                    Sort::Algebra => Cost { gens: 1, ..Cost::default() },
                    Sort::Vector => Cost::default(),
                };
                Ok(Expr { kind: ExprKind::Sym(sym), sort: sym.sort(), offset, cost })
            }
            Some((Tok::LParen, _)) => {
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some((t, o)) => err(ParseErrorKind::UnexpectedToken { found: t.to_string(), expected: "an operand" }, o),
            None => err(ParseErrorKind::UnexpectedEnd("an operand"), self.end),
        }
    }
}

/// Parses `text` as an expression in `mode`.
pub fn parse(text: &str, mode: Mode) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), mode, depth: 0 };
    let e = p.expr()?;
    if let Some((t, o)) = p.bump() {
        return err(ParseErrorKind::UnexpectedToken { found: t.to_string(), expected: "end of input" }, o);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: Symbol) -> ExprKind {
        ExprKind::Sym(s)
    }

    fn kind_tree(e: &Expr) -> String {
        match &e.kind {
            ExprKind::Int(n) => n.to_string(),
            ExprKind::Sym(s) => format!("{s:?}"),
            ExprKind::Add(a, b) => format!("add({},{})", kind_tree(a), kind_tree(b)),
            ExprKind::Sub(a, b) => format!("sub({},{})", kind_tree(a), kind_tree(b)),
            ExprKind::Mul(a, b) => format!("mul({},{})", kind_tree(a), kind_tree(b)),
            ExprKind::Div(a, b) => format!("div({},{})", kind_tree(a), kind_tree(b)),
            ExprKind::Pow(a, n) => format!("pow({},{n})", kind_tree(a)),
            ExprKind::Neg(a) => format!("neg({})", kind_tree(a)),
        }
    }

    #[test]
    fn juxtaposition_and_subtraction() {
        let e = parse("E F - F E", Mode::Algebra).unwrap();
        assert_eq!(kind_tree(&e), "sub(mul(Gen(E),Gen(F)),mul(Gen(F),Gen(E)))");
        assert_eq!(e.sort, Sort::Algebra);
    }

    #[test]
    fn scalar_division() {
        let e = parse("(q - q^-1)/(q + q^-1)", Mode::Scalar).unwrap();
        assert!(matches!(e.kind, ExprKind::Div(..)));
        assert_eq!(
            kind_tree(&e),
            "div(sub(Q,pow(Q,-1)),add(Q,pow(Q,-1)))"
        );
    }

    #[test]
    fn algebra_division_rejected() {
        let e = parse("E / F", Mode::Algebra).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::AlgebraDivision);
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn precedence() {
        assert_eq!(kind_tree(&parse("-q^2", Mode::Scalar).unwrap()), "neg(pow(Q,2))");
        assert_eq!(kind_tree(&parse("-1/2 q", Mode::Scalar).unwrap()), "mul(div(neg(1),2),Q)");
        assert_eq!(kind_tree(&parse("2q s + 1", Mode::Scalar).unwrap()), "add(mul(mul(2,Q),S),1)");
        assert_eq!(kind_tree(&parse("q^(-2)", Mode::Scalar).unwrap()), "pow(Q,-2)");
    }

    #[test]
    fn aliases() {
        let e = parse("X+ X-", Mode::Algebra).unwrap();
        assert_eq!(e.kind, ExprKind::Mul(
            Box::new(Expr { kind: sym(Symbol::Gen(Generator::E)), sort: Sort::Algebra, offset: 0, cost: Cost { gens: 1, ..Cost::default() } }),
            Box::new(Expr { kind: sym(Symbol::Gen(Generator::F)), sort: Sort::Algebra, offset: 3, cost: Cost { gens: 1, ..Cost::default() } }),
        ));
    }

    #[test]
    fn mode_errors() {
        let e = parse("E + Xp_h", Mode::Algebra).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(matches!(e.kind, ParseErrorKind::WrongMode { .. }));
        assert!(matches!(parse("E", Mode::Scalar).unwrap_err().kind, ParseErrorKind::WrongMode { .. }));
        assert_eq!(parse("Xp_h Xm_h", Mode::QLie).unwrap_err().kind, ParseErrorKind::VectorProduct);
        assert_eq!(parse("1 + Xp_h", Mode::QLie).unwrap_err().kind, ParseErrorKind::MixedSum);
        assert_eq!(parse("E^-1", Mode::Algebra).unwrap_err().kind, ParseErrorKind::NegativePower);
        assert!(parse("K^-3 Kinv^2", Mode::Algebra).is_ok());
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse("q +", Mode::Scalar).unwrap_err().offset, 3);
        assert_eq!(parse("q $", Mode::Scalar).unwrap_err().kind, ParseErrorKind::UnexpectedChar('$'));
        assert!(matches!(parse("foo", Mode::Scalar).unwrap_err().kind, ParseErrorKind::UnknownSymbol(_)));
        assert!(matches!(parse("(q", Mode::Scalar).unwrap_err().kind, ParseErrorKind::UnexpectedEnd(_)));
        assert_eq!(parse("q^300", Mode::Scalar).unwrap_err().kind, ParseErrorKind::ExponentRange);
        let deep = "(".repeat(500) + "q" + &")".repeat(500);
        assert_eq!(parse(&deep, Mode::Scalar).unwrap_err().kind, ParseErrorKind::TooDeep);
    }

    #[test]
    fn size_bounds() {
        let e = parse("((q + 1)^64)^64", Mode::Scalar).unwrap_err();
        assert_eq!((e.kind, e.offset), (ParseErrorKind::TooLarge, 12));
        assert!(parse("(q + 1)^64 * (q - 1)^64", Mode::Scalar).is_ok());
        assert_eq!(parse("(q + 1)^64 (q - 1)^64 (s + 1)^64 (q^-1 + 1)^64 q", Mode::Scalar).unwrap_err().kind, ParseErrorKind::TooLarge);
        assert_eq!(parse("(E F)^3 (E F)^3 E", Mode::Algebra).unwrap_err().kind, ParseErrorKind::TooLarge);
        assert!(parse("(E F)^3 (E F)^3", Mode::Algebra).is_ok());
        assert!(parse("q^200 E^12", Mode::Algebra).is_ok());
        assert_eq!(parse("((12345678901^64)^64)^64", Mode::Scalar).unwrap_err().kind, ParseErrorKind::TooLarge);
        let long = vec!["q"; 3000].join(" + ");
        assert_eq!(parse(&long, Mode::Scalar).unwrap_err().kind, ParseErrorKind::TooLarge);
    }
}
