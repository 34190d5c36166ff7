mod common;

use common::*;
use proptest::prelude::*;
use qlie::frontend::{
    eval_str, parse, parse_algebra, parse_scalar, parse_vector, render, render_alg_text, render_vector_text, Mode,
    ParseErrorKind, RepresentationDocument, Style, TableDocument, Value, MAX_DEPTH,
};
use qlie::qlie::{standard_embedding, structure_table};
use qlie::qrep::builtin_rep2;
use qlie::{ExtScalar, StructureTable};

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn algebra_round_trip(x in alg_element()) {
        prop_assert_eq!(parse_algebra(&render_alg_text(&x)).unwrap(), x);
    }

    #[test]
    fn vector_round_trip(v in vector()) {
        prop_assert_eq!(parse_vector(&render_vector_text(&v)).unwrap(), v);
    }

    #[test]
    fn scalar_round_trip(x in rational_scalar()) {
        let text = render(&Value::Scalar(x.clone()), Style::Text);
        prop_assert_eq!(parse_scalar(&text).unwrap(), x);
    }

    #[test]
    fn arbitrary_text_never_panics(text in "[-+*/^() 0-9qsEFKXinvph_]{0,40}") {
        for mode in [Mode::Scalar, Mode::Algebra, Mode::QLie] {
            let _ = eval_str(&text, mode);
        }
    }

    #[test]
    fn arbitrary_bytes_never_panic(text in any::<String>()) {
        let _ = eval_str(&text, Mode::Algebra);
        let _ = TableDocument::from_json(&text);
    }
}

#[test]
fn grammar_examples() {
    assert!(parse("E F - F E", Mode::Algebra).is_ok());
    assert!(parse("(q - q^-1)/(q + q^-1)", Mode::Scalar).is_ok());
    let err = parse("E / F", Mode::Algebra).unwrap_err();
    assert_eq!((err.kind, err.offset), (ParseErrorKind::AlgebraDivision, 2));
    let err = parse("Xp_h", Mode::Algebra).unwrap_err();
    assert!(matches!(err.kind, ParseErrorKind::WrongMode { .. }), "{err:?}");
    assert!(eval_str("0", Mode::Scalar).unwrap() == Value::Scalar(ExtScalar::zero()));
}

#[test]
fn precedence() {
    // ^ binds tighter than unary minus, which binds tighter than juxtaposition
    assert_eq!(parse_scalar("-q^2").unwrap(), -ExtScalar::q_pow(2));
    assert_eq!(parse_scalar("2 q^-1 + 1").unwrap(), &ExtScalar::from_int(2) * &ExtScalar::q_pow(-1) + ExtScalar::one());
    assert_eq!(parse_scalar("1/2 q").unwrap(), &ExtScalar::ratio(1, 2) * &ExtScalar::q());
    assert_eq!(parse_algebra("X+ X-").unwrap(), parse_algebra("E F").unwrap());
}

#[test]
fn nesting_is_bounded() {
    let deep = format!("{}q{}", "(".repeat(MAX_DEPTH + 10), ")".repeat(MAX_DEPTH + 10));
    let err = parse(&deep, Mode::Scalar).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::TooDeep);
    let ok = format!("{}q{}", "(".repeat(20), ")".repeat(20));
    assert!(parse(&ok, Mode::Scalar).is_ok());
}

#[test]
fn table_json_is_stable_and_lossless() {
    let t = structure_table(&standard_embedding()).unwrap();
    let a = TableDocument::new(&t, &[ExtScalar::one()], Some(7), Some(4)).unwrap().to_json();
    let b = TableDocument::new(&t, &[ExtScalar::one()], Some(7), Some(4)).unwrap().to_json();
    assert_eq!(a, b);
    let doc = TableDocument::from_json(&a).unwrap();
    assert_eq!(doc.table().unwrap(), StructureTable::quantum_sl2());
    let meta = a.find("\"metadata\"").unwrap();
    let entries = a.find("\"entries\"").unwrap();
    assert!(meta < entries);
}

#[test]
fn representation_json_round_trip() {
    let r = builtin_rep2();
    let text = RepresentationDocument::from_representation(&r).to_json();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dimension"], 2);
    assert!(v["conj"]["1,1"].is_array());
    assert_eq!(v["pi"]["H_h"][1][1], "-q^-1");
    assert_eq!(RepresentationDocument::from_json(&text).unwrap().representation().unwrap(), r);
}
