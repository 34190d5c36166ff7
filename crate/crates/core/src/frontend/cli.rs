//! The `qlie` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use super::eval::{eval_str, parse_algebra, parse_scalar, parse_vector, EvalError, Value};
use super::json::{DocError, RepresentationDocument, TableDocument};
use super::parse::{Mode, ParseError};
use super::render::{
    alg_json, render_alg_latex, render_alg_text, render_series_latex, render_table_latex, render_table_text,
    series_json, Style,
};
use super::render;
use crate::pbw::{ad_apply, casimir, casimir_word, AdLetter, AdWord, AlgElement};
use crate::qlie::{structure_table, Basis, Embedding, QLieError, StructureTable};
use crate::qrep::{builtin_rep2, verify_representation, RepReport};
use crate::scalar::{h_series, ExtScalar};
use crate::verify::{self, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qlie", version, about = "Exact computations in the quantum Lie algebra (sl2)_h inside U_q(sl2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TwistArg {
    /// Coefficients of p(C), constant term first, comma separated; must sum to 1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "C0,C1,...")]
    twist: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an expression in canonical form (PBW order for algebra elements).
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "algebra")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Multiply algebra elements left to right.
    Multiply {
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// The quantum Lie bracket [a, b]_h of two (sl2)_h elements.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        twist: TwistArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Apply an adjoint word such as "E F" (ad_E ad_F) to an algebra element.
    Ad {
        /// Letters from E, F, K, Kinv, H; the rightmost acts first.
        word: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Compute the structure table of an embedding.
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
        #[command(flatten)]
        twist: TwistArg,
        /// Include h-series of every constant up to this order (JSON only).
        #[arg(long)]
        series: Option<usize>,
    },
    /// Check that the Casimir element is central and that ad_C fixes the embedding.
    CasimirCheck {
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Power series in h (q = e^h) of a scalar expression.
    Series {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Check a representation against the structure table.
    RepCheck {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        builtin2: bool,
        /// Representation JSON document.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print the representation document instead of checking it.
        #[arg(long)]
        emit: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
    /// Run the seeded verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        /// Golden table JSON to compare against instead of the built-in constants.
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Style,
    },
}

/// Errors that end a command with exit code 2.
enum Usage {
    Expr { input: String, err: EvalError },
    Msg(String),
}

impl From<DocError> for Usage {
    fn from(e: DocError) -> Self {
        Usage::Msg(e.to_string())
    }
}

impl From<QLieError> for Usage {
    fn from(e: QLieError) -> Self {
        Usage::Msg(e.to_string())
    }
}

fn expr_err(input: &str) -> impl FnOnce(EvalError) -> Usage + '_ {
    move |err| Usage::Expr { input: input.to_string(), err }
}

fn offset_of(err: &EvalError) -> Option<usize> {
    match err {
        EvalError::Parse(ParseError { offset, .. }) | EvalError::Arith { offset, .. } => Some(*offset),
        EvalError::ScalarNotVector => None,
    }
}

/// Runs the CLI on `args` (including the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(Usage::Expr { input, err: e }) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(off) = offset_of(&e) {
                let col = input.get(..off).map_or(off, |s| s.chars().count());
                let _ = writeln!(err, "  {input}\n  {}^", " ".repeat(col));
            }
            EXIT_USAGE
        }
        Err(Usage::Msg(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
    }
}

fn embedding(t: &TwistArg) -> Result<(Embedding, Vec<ExtScalar>), Usage> {
    if t.twist.is_empty() {
        return Ok((Embedding::standard(), vec![ExtScalar::one()]));
    }
    let p = t.twist.iter().map(|c| parse_scalar(c).map_err(expr_err(c))).collect::<Result<Vec<_>, _>>()?;
    Ok((Embedding::twisted(&p)?, p))
}

fn parse_word(text: &str) -> Result<AdWord, Usage> {
    let letters = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| AdLetter::from_name(s).ok_or_else(|| Usage::Msg(format!("unknown ad letter {s:?}; use E, F, K, Kinv or H"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AdWord::letters(&letters))
}

fn read_file(path: &PathBuf) -> Result<String, Usage> {
    std::fs::read_to_string(path).map_err(|e| Usage::Msg(format!("{}: {e}", path.display())))
}

fn rep_report_text(r: &RepReport) -> String {
    let mut lines = Vec::new();
    for p in &r.pairs {
        let status = if p.pass { "PASS" } else { "FAIL" };
        lines.push(format!("{status} [{}, {}]", p.left.name(), p.right.name()));
    }
    let all = |v: bool| if v { "PASS" } else { "FAIL" };
    lines.push(format!("{} involution", all(r.involution.iter().all(|x| x.2))));
    lines.push(format!("{} q-linearity", all(r.q_linearity.iter().all(|x| x.2))));
    lines.push(format!("{} compatibility", all(r.compatibility.iter().all(|x| x.1))));
    lines.join("\n")
}

fn rep_report_json(r: &RepReport) -> serde_json::Value {
    let pairs: Vec<_> = r
        .pairs
        .iter()
        .map(|p| {
            json!({
                "left": p.left.name(),
                "right": p.right.name(),
                "pass": p.pass,
                "qcommutator": p.qcommutator.rows().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "expected": p.expected.rows().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "pass": r.pass(),
        "pairs": pairs,
        "involution": r.involution.iter().all(|x| x.2),
        "q_linearity": r.q_linearity.iter().all(|x| x.2),
        "compatibility": r.compatibility.iter().all(|x| x.1),
    })
}

fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let mut emit = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match cmd {
        Command::Normalize { expr, mode, format } => {
            let v = eval_str(&expr, mode).map_err(expr_err(&expr))?;
            emit(render(&v, format));
        }
        Command::Multiply { exprs, format } => {
            let mut acc = AlgElement::one();
            for e in &exprs {
                acc = &acc * &parse_algebra(e).map_err(expr_err(e))?;
            }
            emit(render(&Value::Alg(acc), format));
        }
        Command::Bracket { a, b, twist, format } => {
            let (e, _) = embedding(&twist)?;
            let va = parse_vector(&a).map_err(expr_err(&a))?;
            let vb = parse_vector(&b).map_err(expr_err(&b))?;
            let v = e.bracket(&va, &vb)?;
            emit(render(&Value::Vector(v), format));
        }
        Command::Ad { word, expr, format } => {
            let w = parse_word(&word)?;
            let x = parse_algebra(&expr).map_err(expr_err(&expr))?;
            emit(render(&Value::Alg(ad_apply(&w, &x)), format));
        }
        Command::Table { format, twist, series } => {
            let (e, p) = embedding(&twist)?;
            let t = structure_table(&e)?;
            match format {
                Style::Text => emit(render_table_text(&t)),
                Style::Latex => emit(render_table_latex(&t)),
                Style::Json => {
                    let doc = TableDocument::new(&t, &p, None, series).map_err(|e| Usage::Msg(e.to_string()))?;
                    emit(doc.to_json());
                }
            }
        }
        Command::CasimirCheck { format } => {
            let c = casimir();
            let gens = [("E", AlgElement::e()), ("F", AlgElement::f()), ("K", AlgElement::k())];
            let commutes: Vec<(&str, bool)> = gens.iter().map(|(n, g)| (*n, c.commutator(g).is_zero())).collect();
            let cw = casimir_word();
            let e = Embedding::standard();
            let fixes: Vec<(Basis, bool)> =
                Basis::ALL.iter().map(|&b| (b, ad_apply(&cw, e.image(b)) == *e.image(b))).collect();
            let pass = commutes.iter().all(|x| x.1) && fixes.iter().all(|x| x.1);
            match format {
                Style::Json => emit(
                    serde_json::to_string_pretty(&json!({
                        "casimir": alg_json(&c),
                        "commutes": commutes.iter().map(|(n, ok)| json!({ "generator": n, "pass": ok })).collect::<Vec<_>>(),
                        "ad_fixes_basis": fixes.iter().map(|(b, ok)| json!({ "basis": b.name(), "pass": ok })).collect::<Vec<_>>(),
                        "pass": pass,
                    }))
                    .expect("serializable"),
                ),
                Style::Text | Style::Latex => {
                    let shown = if format == Style::Latex { render_alg_latex(&c) } else { render_alg_text(&c) };
                    emit(format!("C = {shown}"));
                    for (n, ok) in &commutes {
                        emit(format!("{} [C, {n}] = 0", if *ok { "PASS" } else { "FAIL" }));
                    }
                    for (b, ok) in &fixes {
                        emit(format!("{} ad_C({}) = {}", if *ok { "PASS" } else { "FAIL" }, b.name(), b.name()));
                    }
                }
            }
            return Ok(if pass { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Series { expr, order, format } => {
            let x = parse_scalar(&expr).map_err(expr_err(&expr))?;
            let s = h_series(&x, order).map_err(|e| Usage::Msg(format!("{expr}: {e}")))?;
            emit(match format {
                Style::Text => s.to_string(),
                Style::Latex => render_series_latex(&s),
                Style::Json => series_json(&s).to_string(),
            });
        }
        Command::RepCheck { builtin2, file, emit: dump, format } => {
            let r = match (&file, builtin2) {
                (Some(path), _) => RepresentationDocument::from_json(&read_file(path)?)?.representation()?,
                (None, _) => builtin_rep2(),
            };
            if dump {
                emit(RepresentationDocument::from_representation(&r).to_json());
                return Ok(EXIT_OK);
            }
            let report = verify_representation(&r, &StructureTable::quantum_sl2());
            match format {
                Style::Json => emit(serde_json::to_string_pretty(&rep_report_json(&report)).expect("serializable")),
                _ => emit(rep_report_text(&report)),
            }
            if !report.pass() {
                let pairs: Vec<_> =
                    report.failing_pairs().iter().map(|(a, b)| format!("[{}, {}]", a.name(), b.name())).collect();
                let _ = writeln!(err, "representation check failed: {}", pairs.join(", "));
                return Ok(EXIT_FAIL);
            }
        }
        Command::Verify { suite, seed, cases, expect, format } => {
            let golden = match &expect {
                Some(path) => TableDocument::from_json(&read_file(path)?)?.table()?,
                None => StructureTable::quantum_sl2(),
            };
            let report = verify::run(suite, &VerifyConfig { seed, cases, golden });
            match format {
                Style::Json => emit(report.to_json()),
                _ => {
                    for c in &report.checks {
                        let status = if c.pass { "PASS" } else { "FAIL" };
                        emit(format!("{status} {}/{}: {}", c.suite.name(), c.name, c.detail));
                    }
                    let failed = report.failures().count();
                    emit(format!("{} checks, {} failed", report.checks.len(), failed));
                }
            }
            if !report.pass {
                let _ = writeln!(err, "verification failed");
                return Ok(EXIT_FAIL);
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli_main(std::iter::once("qlie").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bracket_of_equal_basis_is_zero() {
        assert_eq!(run_cli(&["bracket", "Xp_h", "Xp_h"]), (0, "0\n".into(), String::new()));
    }

    #[test]
    fn parse_errors_exit_2_with_caret() {
        let (code, out, err) = run_cli(&["normalize", "E / F"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("at byte 2"), "{err}");
        assert!(err.contains("\n    ^"), "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_cli(&["frobnicate"]).0, 2);
        assert_eq!(run_cli(&["rep-check"]).0, 2);
        assert_eq!(run_cli(&["table", "--twist", "1,1"]).0, 2);
    }

    #[test]
    fn ad_word() {
        let (code, out, _) = run_cli(&["ad", "H", "E"]);
        assert_eq!((code, out.as_str()), (0, "2 * E\n"));
    }
}
