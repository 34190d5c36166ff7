//! Text, LaTeX and JSON renderings. Text output parses back to the same value.

use std::fmt::Write;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value as Json};

use crate::pbw::{AlgElement, Monomial};
use crate::qlie::{basis_pairs, Basis, QLieVector, StructureTable};
use crate::scalar::{ExtScalar, HSeries, RatFunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    Text,
    Latex,
    Json,
}

/// Writes `sum coeff * symbol` with signs folded into the joins.
/// `symbol = None` marks a bare scalar term.
fn write_combination(out: &mut String, items: &[(ExtScalar, Option<String>)], latex: bool) {
    if items.is_empty() {
        out.push('0');
        return;
    }
    for (i, (c, sym)) in items.iter().enumerate() {
        let (neg, body) = if latex {
            let (neg, t) = latex_coeff(c);
            match sym {
                Some(sym) if t.is_empty() => (neg, sym.clone()),
                Some(sym) => (neg, format!("{t}\\,{sym}")),
                None if t.is_empty() => (neg, "1".into()),
                None => (neg, t),
            }
        } else {
            match (c.simple_term(), sym) {
                (Some((neg, t)), Some(sym)) if t == "1" => (neg, sym.clone()),
                (Some((neg, t)), Some(sym)) => (neg, format!("{t} * {sym}")),
                (Some((neg, t)), None) => (neg, t),
                (None, Some(sym)) => (false, format!("({c}) * {sym}")),
                (None, None) => (false, format!("({c})")),
            }
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
}

fn monomial_text(m: &Monomial) -> Option<String> {
    let mut parts = Vec::new();
    let pow = |name: &str, n: i64| if n == 1 { name.to_string() } else { format!("{name}^{n}") };
    if m.f > 0 {
        parts.push(pow("F", m.f as i64));
    }
    if m.k != 0 {
        parts.push(pow("K", m.k as i64));
    }
    if m.e > 0 {
        parts.push(pow("E", m.e as i64));
    }
    (!parts.is_empty()).then(|| parts.join(" "))
}

fn monomial_latex(m: &Monomial) -> Option<String> {
    let mut parts = Vec::new();
    let pow = |name: &str, n: i64| if n == 1 { name.to_string() } else { format!("{name}^{{{n}}}") };
    if m.f > 0 {
        parts.push(pow("F", m.f as i64));
    }
    if m.k != 0 {
        parts.push(pow("K", m.k as i64));
    }
    if m.e > 0 {
        parts.push(pow("E", m.e as i64));
    }
    (!parts.is_empty()).then(|| parts.join(" "))
}

pub fn render_scalar_text(x: &ExtScalar) -> String {
    x.to_string()
}

/// Monomials in ascending `(f, k, e)` order.
pub fn render_alg_text(x: &AlgElement) -> String {
    let items: Vec<_> = x.terms().map(|(m, c)| (c.clone(), monomial_text(m))).collect();
    let mut out = String::new();
    write_combination(&mut out, &items, false);
    out
}

pub fn render_vector_text(v: &QLieVector) -> String {
    let items: Vec<_> = v.terms().map(|(b, c)| (c.clone(), Some(b.name().to_string()))).collect();
    let mut out = String::new();
    write_combination(&mut out, &items, false);
    out
}

fn latex_laurent(terms: &[(i64, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let coeff = if mag.is_integer() {
            mag.to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        match *e {
            0 => out.push_str(&coeff),
            e => {
                if !mag.is_one() {
                    out.push_str(&coeff);
                }
                if e == 1 {
                    out.push('q');
                } else {
                    let _ = write!(out, "q^{{{e}}}");
                }
            }
        }
    }
    out
}

fn latex_ratfunc(x: &RatFunc) -> String {
    let num = latex_laurent(&x.numerator_terms());
    if x.is_laurent() {
        return num;
    }
    let den: Vec<_> = x
        .denominator()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, c.clone()))
        .collect();
    format!("\\frac{{{num}}}{{{}}}", latex_laurent(&den))
}

const LATEX_S: &str = "\\sqrt{\\tfrac{2}{q+q^{-1}}}";

pub fn render_scalar_latex(x: &ExtScalar) -> String {
    let a = (!x.a().is_zero()).then(|| latex_ratfunc(x.a()));
    let b = (!x.b().is_zero()).then(|| {
        let t = latex_ratfunc(x.b());
        if t == "1" {
            LATEX_S.to_string()
        } else if t == "-1" {
            format!("-{LATEX_S}")
        } else if x.b().as_monomial().is_some() {
            format!("{t}{LATEX_S}")
        } else {
            format!("\\left({t}\\right){LATEX_S}")
        }
    });
    match (a, b) {
        (None, None) => "0".into(),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (Some(a), Some(b)) if b.starts_with('-') => format!("{a} {b}").replacen(" -", " - ", 1),
        (Some(a), Some(b)) => format!("{a} + {b}"),
    }
}

/// `(negative, text)`; empty text means a unit coefficient.
fn latex_coeff(c: &ExtScalar) -> (bool, String) {
    if let Some(r) = c.as_rational() {
        if r.abs().is_one() {
            return (r.is_negative(), String::new());
        }
    }
    if c.simple_term().is_some() {
        let t = render_scalar_latex(c);
        if let Some(rest) = t.strip_prefix('-') {
            return (true, rest.to_string());
        }
        return (false, t);
    }
    (false, format!("\\left({}\\right)", render_scalar_latex(c)))
}

pub fn render_alg_latex(x: &AlgElement) -> String {
    let items: Vec<_> = x.terms().map(|(m, c)| (c.clone(), monomial_latex(m))).collect();
    let mut out = String::new();
    write_combination(&mut out, &items, true);
    out
}

pub fn render_vector_latex(v: &QLieVector) -> String {
    let items: Vec<_> = v.terms().map(|(b, c)| (c.clone(), Some(b.latex().to_string()))).collect();
    let mut out = String::new();
    write_combination(&mut out, &items, true);
    out
}

pub fn render_table_text(t: &StructureTable) -> String {
    t.to_string()
}

/// An `align*` block with one bracket relation per line.
pub fn render_table_latex(t: &StructureTable) -> String {
    let mut out = String::from("\\begin{align*}\n");
    let lines: Vec<_> = basis_pairs()
        .map(|(a, b)| format!("[{}, {}]_h &= {}", a.latex(), b.latex(), render_vector_latex(t.entry(a, b))))
        .collect();
    out.push_str(&lines.join(" \\\\\n"));
    out.push_str("\n\\end{align*}\n");
    out
}

pub fn render_series_latex(s: &HSeries) -> String {
    let mut out = String::new();
    let mut first = true;
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        first = false;
        let mag = c.abs();
        let coeff = if mag.is_integer() {
            mag.to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        match k {
            0 => out.push_str(&coeff),
            _ => {
                if !mag.is_one() {
                    out.push_str(&coeff);
                }
                if k == 1 {
                    out.push('h');
                } else {
                    let _ = write!(out, "h^{{{k}}}");
                }
            }
        }
    }
    if first {
        out.push('0');
    }
    let _ = write!(out, " + O(h^{{{}}})", s.order() + 1);
    out
}

pub fn scalar_json(x: &ExtScalar) -> Json {
    Json::String(x.to_string())
}

pub fn alg_json(x: &AlgElement) -> Json {
    let terms: Vec<_> = x
        .terms()
        .map(|(m, c)| json!({ "f": m.f, "k": m.k, "e": m.e, "coeff": c.to_string() }))
        .collect();
    json!({ "terms": terms, "text": render_alg_text(x) })
}

pub fn vector_json(v: &QLieVector) -> Json {
    let mut map = serde_json::Map::new();
    for b in Basis::ALL {
        map.insert(b.name().into(), scalar_json(&v[b]));
    }
    Json::Object(map)
}

pub fn series_json(s: &HSeries) -> Json {
    json!({ "order": s.order(), "coefficients": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::{parse_algebra, parse_scalar, parse_vector};
    use crate::qlie::Embedding;

    #[test]
    fn vector_latex() {
        assert_eq!(render_vector_latex(&QLieVector::basis(Basis::H)), "H_h");
        let v = QLieVector::along(Basis::Xp, ExtScalar::from_int(-2));
        assert_eq!(render_vector_latex(&v), "-2\\,X^+_h");
    }

    #[test]
    fn table_entry_text() {
        let t = StructureTable::quantum_sl2();
        assert_eq!(render_vector_text(t.entry(Basis::H, Basis::Xp)), "2q * Xp_h");
        assert_eq!(render_vector_text(t.entry(Basis::Xp, Basis::H)), "-2q^-1 * Xp_h");
        assert_eq!(render_vector_text(t.entry(Basis::Xm, Basis::Xp)), "-H_h");
        assert_eq!(render_vector_text(t.entry(Basis::H, Basis::H)), "(2q - 2q^-1) * H_h");
        assert_eq!(render_vector_text(t.entry(Basis::Xp, Basis::Xp)), "0");
    }

    #[test]
    fn text_roundtrips() {
        let e = Embedding::standard();
        for b in Basis::ALL {
            let x = e.image(b);
            assert_eq!(&parse_algebra(&render_alg_text(x)).unwrap(), x, "{}", render_alg_text(x));
        }
        let v = QLieVector::new(ExtScalar::sigma(), -ExtScalar::s(), &ExtScalar::s() * &ExtScalar::sigma());
        assert_eq!(parse_vector(&render_vector_text(&v)).unwrap(), v);
        let x = &ExtScalar::sigma() + &(&ExtScalar::s() * &ExtScalar::ratio(-1, 3));
        assert_eq!(parse_scalar(&render_scalar_text(&x)).unwrap(), x);
    }

    #[test]
    fn alg_text_shape() {
        let x = parse_algebra("2 F K^-1 E - q^2 + s K").unwrap();
        assert_eq!(render_alg_text(&x), "-q^2 + s * K + 2 * F K^-1 E");
    }

    #[test]
    fn scalar_latex() {
        assert_eq!(render_scalar_latex(&ExtScalar::sigma()), "\\frac{2q}{q^{2} + 1}");
        assert_eq!(render_scalar_latex(&ExtScalar::q_pow(-1)), "q^{-1}");
    }
}
