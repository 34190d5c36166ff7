//! Text front end: the expression grammar, renderers and JSON documents.

mod cli;
mod eval;
mod json;
mod parse;
mod render;

pub use cli::{cli_main, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use eval::{eval_ast, eval_str, parse_algebra, parse_scalar, parse_vector, EvalError, Value};
pub use json::{
    DocError, RepresentationDocument, SeriesView, TableDocument, TableMetadata, MAX_REP_DIMENSION,
    TOOL_VERSION,
};
pub use parse::{
    parse, Cost, Expr, ExprKind, Generator, Mode, ParseError, ParseErrorKind, Sort, Symbol, MAX_ALGEBRA_EXPONENT,
    MAX_ALGEBRA_DEGREE, MAX_BITS, MAX_DEGREE, MAX_DEPTH, MAX_EXPONENT, MAX_TOKENS,
};
pub use render::{
    alg_json, render_alg_latex, render_alg_text, render_scalar_latex, render_scalar_text, render_series_latex,
    render_table_latex, render_table_text, render_vector_latex, render_vector_text, scalar_json, series_json,
    vector_json, Style,
};

/// Renders any evaluated value in the given style.
pub fn render(v: &Value, style: Style) -> String {
    match (v, style) {
        (Value::Scalar(x), Style::Text) => render_scalar_text(x),
        (Value::Scalar(x), Style::Latex) => render_scalar_latex(x),
        (Value::Scalar(x), Style::Json) => scalar_json(x).to_string(),
        (Value::Alg(x), Style::Text) => render_alg_text(x),
        (Value::Alg(x), Style::Latex) => render_alg_latex(x),
        (Value::Alg(x), Style::Json) => alg_json(x).to_string(),
        (Value::Vector(x), Style::Text) => render_vector_text(x),
        (Value::Vector(x), Style::Latex) => render_vector_latex(x),
        (Value::Vector(x), Style::Json) => vector_json(x).to_string(),
    }
}
