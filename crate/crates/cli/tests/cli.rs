use std::path::PathBuf;
use std::process::Command;

use liefour_cli::format::{emit_document, emit_form, parse_document, parse_form, FormatError};
use liefour_core::clifford::oscillator_form;
use liefour_core::susy::{
    build_little_algebra_rep, build_n2_presentation, build_quartic_poincare_presentation,
};
use liefour_core::{Error, Scalar};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("liefour").chain(args.iter().copied());
    let code = liefour_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn presentation_fixtures_round_trip() {
    for name in [
        "n2-susy-d4.alg",
        "quartic-poincare-eq4.alg",
        "little-rep-16.rep",
    ] {
        let t = text(name);
        let doc = parse_document(&t).unwrap();
        assert_eq!(
            emit_document(&doc.presentation, doc.representation.as_ref()),
            t,
            "{name}"
        );
    }
    let t = text("fock-oscillators.form");
    assert_eq!(emit_form(&parse_form(&t).unwrap()), t);
}

#[test]
fn fixtures_match_the_builders() {
    let n2 = parse_document(&text("n2-susy-d4.alg")).unwrap();
    assert_eq!(n2.presentation, build_n2_presentation(false).unwrap());
    assert!(n2.representation.is_none());
    let eq4 = parse_document(&text("quartic-poincare-eq4.alg")).unwrap();
    assert_eq!(
        eq4.presentation,
        build_quartic_poincare_presentation().unwrap()
    );
    let little = build_little_algebra_rep(Scalar::symbol("m"), Scalar::symbol("z")).unwrap();
    let rep = parse_document(&text("little-rep-16.rep")).unwrap();
    assert_eq!(rep.presentation, little.presentation);
    assert_eq!(rep.representation.unwrap(), little.rep);
    assert_eq!(
        parse_form(&text("fock-oscillators.form")).unwrap(),
        oscillator_form(&little).unwrap()
    );
}

#[test]
fn asymmetric_odd_table_is_rejected() {
    let mut t = text("n2-susy-d4.alg");
    t.push_str(r#"{"entry":"bracket","operands":["Q2_2","Q1_1"],"result":"2*Z"}"#);
    t.push('\n');
    match parse_document(&t) {
        Err(FormatError::Invalid {
            source: Error::Validation { invariant, .. },
            ..
        }) => assert_eq!(invariant, "symmetric odd-odd bracket"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn empty_presentation_is_valid() {
    let t =
        "{\"entry\":\"presentation\",\"schema\":1,\"name\":\"empty\",\"kind\":\"superalgebra\"}\n";
    let doc = parse_document(t).unwrap();
    assert!(doc.presentation.generators().is_empty());
    assert_eq!(emit_document(&doc.presentation, None), t);
}

#[test]
fn parse_errors_are_located() {
    let t = "{\"entry\":\"presentation\",\"schema\":1,\"name\":\"x\",\"kind\":\"superalgebra\"}\n{\"entry\":\"generator\",\"name\":\"A\",\"grade\":[1,0]}\n{\"entry\":\"bracket\",\"operands\":[\"A\",\"A\"],\"result\":\"2*(\"}\n";
    match parse_document(t) {
        Err(FormatError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 4)),
        other => panic!("unexpected {other:?}"),
    }
    match parse_document("{\"entry\":\"presentation\",\n") {
        Err(FormatError::Parse { line, .. }) => assert_eq!(line, 1),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn grading_violations_are_rejected() {
    let mut t = text("n2-susy-d4.alg");
    t.push_str(r#"{"entry":"bracket","operands":["Q1_1","Qb2_2"],"result":"Z"}"#);
    assert!(matches!(
        parse_document(&t),
        Err(FormatError::Invalid {
            source: Error::Validation { .. },
            ..
        })
    ));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gcal", "--n", "2"]).0, 0);
    assert_eq!(run(&["verify-quartic", "--against", "little"]).0, 1);
    let (code, _, err) = run(&["gcal", "--bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    assert_eq!(run(&["verify-super", "--file", "/nonexistent.alg"]).0, 2);
    let form = fixture("fock-oscillators.form");
    let form = form.to_str().unwrap();
    assert_eq!(
        run(&[
            "clifford",
            "--matrices",
            form,
            "--degree",
            "4",
            "--target",
            "x1^3"
        ])
        .0,
        2
    );
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn gcal_report_carries_the_certificate() {
    let (code, out, err) = run(&["gcal", "--n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["data"]["target"], "x1^4 + x2^4");
    assert!(v["data"]["certificate"].is_object());
    assert!(err.contains("quadratic-incompatibility"));
}

#[test]
fn numeric_parameters_are_accepted() {
    let (code, out, _) = run(&["little-rep", "--m", "-1", "--z", "0", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["data"]["coefficients"][0], "4");
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn json_flag_silences_stderr_and_out_writes_a_file() {
    let (_, out, err) = run(&["conventions", "--json"]);
    assert!(err.is_empty());
    assert!(out.starts_with('{'));
    let path = std::env::temp_dir().join(format!("liefour-{}.json", std::process::id()));
    let (code, out, _) = run(&["conventions", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .contains("\"epsilon-tables\""));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["verify-quartic", "--against", "eq4"]);
    let b = run(&["verify-quartic", "--against", "eq4"]);
    assert_eq!(a, b);
    let other = run(&["verify-quartic", "--against", "eq4", "--m", "1"]).1;
    let digest =
        |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["inputs_digest"].clone();
    assert_ne!(digest(&a.1), digest(&other));
}

#[test]
fn binary_honours_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_liefour");
    let ok = Command::new(bin)
        .args(["gcal", "--n", "1"])
        .env("LIEFOUR_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin)
        .args(["gcal", "--n", "1"])
        .env("LIEFOUR_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
