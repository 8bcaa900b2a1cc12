use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn skewlen(args: &[&str], stdin: Option<&Value>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewlen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let input = stdin.map(|v| v.to_string()).unwrap_or_default();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run_spec(spec: Value, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["--spec", "-"];
    args.extend_from_slice(extra);
    let out = skewlen(&args, Some(&spec));
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn gf4_code(n: usize, generator: Value) -> Value {
    json!({"field": {"q": 2, "m": 2}, "code": {"n": n, "generator": generator}})
}

#[test]
fn x_plus_a_is_not_degenerate() {
    let (code, v) = run_spec(
        gf4_code(3, json!({"type": "conv_poly", "data": "x+a"})),
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(v["l_R"], 3);
    assert_eq!(v["degenerate"], false);
    assert!(v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["value"] != true));
}

#[test]
fn repetition_code_shortens_to_length_one() {
    let spec = gf4_code(3, json!({"type": "matrix", "data": [[1, 1, 1]]}));
    let (code, v) = run_spec(spec.clone(), &["--analysis", "lengths,shorten"]);
    assert_eq!(code, 0);
    assert_eq!(v["lengths"]["l_R"], 1);
    assert_eq!(v["lengths"]["degenerate"], true);
    assert_eq!(v["shorten"]["shortened"]["length"], 1);
    assert_eq!(v["shorten"]["shortened"]["cyclic"], true);
    assert_eq!(v["shorten"]["original_distribution"], json!([1, 3, 0]));
    assert_eq!(v["shorten"]["shortened"]["distribution"], json!([1, 3]));
}

#[test]
fn repetition_code_by_generator_polynomial() {
    let (code, v) = run_spec(
        gf4_code(3, json!({"type": "conv_poly", "data": "x^2+x+1"})),
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(v["l_R"], 1);
}

#[test]
fn zero_code() {
    let (code, v) = run_spec(gf4_code(3, json!({"type": "matrix", "data": []})), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["l_R"], 0);
    assert_eq!(v["l_P"], 1);
    assert_eq!(v["degenerate"], true);
}

#[test]
fn full_space_shortens_to_itself() {
    let (code, v) = run_spec(
        gf4_code(3, json!({"type": "conv_poly", "data": "1"})),
        &["--analysis", "shorten"],
    );
    assert_eq!(code, 0);
    assert_eq!(v["shortened"]["length"], 3);
    assert_eq!(v["shortened"]["k"], 3);
}

#[test]
fn non_cyclic_matrix_is_an_input_error() {
    let out = skewlen(
        &["--spec", "-", "--analysis", "shorten"],
        Some(&gf4_code(3, json!({"type": "matrix", "data": [[1, 0, 0]]}))),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not"));
}

#[test]
fn malformed_spec_is_an_input_error() {
    let out = skewlen(&["--spec", "-"], Some(&json!({"field": {"q": 6, "m": 2}})));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ambient_cap_exceeded() {
    let (code, _) = run_spec(
        gf4_code(3, json!({"type": "conv_poly", "data": "x+1"})),
        &["--cap-ambient", "2"],
    );
    assert_eq!(code, 3);
}

#[test]
fn non_central_check_polynomial_is_reported() {
    let spec = json!({
        "field": {"q": 2, "m": 2, "r": 1, "n": 4},
        "code": {"n": 4, "generator": {"type": "lin_poly", "data": {"r": 1, "coeffs": "x^[1]+x"}}},
        "shorten_r": 1
    });
    let out = skewlen(&["--spec", "-", "--analysis", "shorten"], Some(&spec));
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not central"));
}

#[test]
fn skew_shortening_with_central_check_polynomial() {
    let spec = json!({
        "field": {"q": 2, "m": 2, "r": 1, "n": 4},
        "code": {"n": 4, "generator": {"type": "lin_poly", "data": {"r": 1, "coeffs": "x^[2]+x"}}},
        "shorten_r": 1
    });
    let (code, v) = run_spec(spec, &["--analysis", "shorten"]);
    assert_eq!(code, 0);
    assert_eq!(v["method"], "pseudo_skew");
    assert_eq!(v["shortened"]["length"], 2);
}

#[test]
fn repetition_equivalence_witness() {
    let mut spec = gf4_code(3, json!({"type": "matrix", "data": [[1, 1, 1]]}));
    spec["equivalence"] = json!({
        "target": {"n": 1, "generator": {"type": "matrix", "data": [[1]]}},
        "a": 1,
        "beta": 1
    });
    let (code, v) = run_spec(spec, &["--analysis", "equivalence"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 3);
    assert_eq!(v["n_prime"], 1);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
}

#[test]
fn empty_grid_passes() {
    let out = skewlen(&["--grid", ""], None);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"], 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn small_grid_skips_root_sets_off_the_coprime_case() {
    let out = skewlen(&["--grid", "q=2;m=2;n=6"], None);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let roots = &v["invariants"]["root_set_criteria"];
    assert_eq!(roots["pass"], 0);
    assert!(roots["skip"].as_u64().unwrap() > 0);
    assert!(
        v["invariants"]["degeneracy_unanimity"]["pass"]
            .as_u64()
            .unwrap()
            > 0
    );
}

#[test]
fn bad_grid_is_an_input_error() {
    let out = skewlen(&["--grid", "q=2;m=2;z=3"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_runs_are_byte_identical() {
    let spec = gf4_code(5, json!({"type": "conv_poly", "data": "x^2+a*x+1"}));
    let args = ["--spec", "-", "--analysis", "lengths,degeneracy,shorten"];
    let a = skewlen(&args, Some(&spec));
    let b = skewlen(&args, Some(&spec));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
    let grid = ["--grid", "q=2;m=2;r=1;n=2,4", "--seed", "7"];
    assert_eq!(skewlen(&grid, None).stdout, skewlen(&grid, None).stdout);
}

#[test]
fn text_format() {
    let out = skewlen(
        &["--spec", "-", "--format", "text"],
        Some(&gf4_code(3, json!({"type": "conv_poly", "data": "x+a"}))),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank length l_R = 3"));
}
