use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_perind"))
        .args(args)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "perind {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "perind/1");
    v
}

#[test]
fn hilbert_invariant_map() {
    let v = run(&["hilbert", "3", "-1"]);
    assert_eq!(v["support"], serde_json::json!(["2", "3"]));
    assert_eq!(v["sum"], "0/1");
    let v = run(&["hilbert", "-1", "-1", "--place", "real"]);
    assert_eq!(v["symbol"], -1);
    let v = run(&["hilbert", "2", "-1", "--place", "2"]);
    assert_eq!(v["symbol"], 1);
}

#[test]
fn cocycle_files() {
    let v = run(&["cocycle", &data("f9_coboundary.json")]);
    assert_eq!(v["h2"]["order"], 1);
    assert_eq!(v["cochain"]["coboundary"], serde_json::json!([0, 0, 0, 4]));
    assert_eq!(v["cochain"]["coboundary_is_cocycle"], true);

    let v = run(&["cocycle", &data("z4_sign.json")]);
    assert_eq!(v["h2"]["order"], 2);
    assert_eq!(v["cochain"]["is_cocycle"], true);
    assert_eq!(
        v["cochain"]["crossed_product"]["associative_on_basis"],
        true
    );
}

#[test]
fn triples() {
    let v = run(&["triples", "check", "2", "1", "2"]);
    assert_eq!(v["admissible"], true);
    let v = run(&["triples", "check", "5", "2", "4"]);
    assert_eq!(v["admissible"], false);
    let v = run(&["triples", "enumerate", "1", "--bound", "3"]);
    assert_eq!(v["triples"].as_array().unwrap().len(), 3);
    let v = run(&["triples", "with-section", "2", "3"]);
    assert_eq!(v["triples"], serde_json::json!([{"period": 1, "index": 1}]));
}

#[test]
fn models() {
    assert_eq!(run(&["model", "index", &data("circle6.json")])["index"], 6);
    assert_eq!(
        run(&["model", "index", &data("two_components.json")])["index"],
        6
    );
    let v = run(&["model", "glue", "6", "5", "--genus-c", "2"]);
    assert_eq!(v["index"], 6);
    assert_eq!(v["generic_genus"], 13);
    assert_eq!(v["dual_graph"].as_array().unwrap().len(), 6);
}

#[test]
fn analyze() {
    let v = run(&[
        "analyze", "diagonal", "--n", "2", "--a", "-1", "--b", "-1", "--json",
    ]);
    assert_eq!(v["verdict"], "section_conjecture_holds_trivially");
    assert_eq!(v["witness"], "real");
    assert_eq!(v["genus"], 3);

    let v = run(&[
        "analyze", "diagonal", "--n", "2", "--a", "3", "--b", "-1", "--json",
    ]);
    assert_eq!(v["witness"], "3");
    assert_eq!(v["real_points"], true);

    let v = run(&[
        "analyze",
        "diagonal",
        "--n",
        "2",
        "--a",
        "1",
        "--b",
        "1",
        "--json",
        "--assume-section",
    ]);
    assert_eq!(v["verdict"], "global_brauer_vanishes");

    let v = run(&[
        "analyze",
        "model",
        "--genus",
        "13",
        "--prime",
        "5",
        "--fibre",
        &data("circle6.json"),
        "--json",
    ]);
    assert_eq!(v["witness"], "5");
}

#[test]
fn analyze_prints_text_without_json_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_perind"))
        .args(["analyze", "diagonal", "--n", "2", "--a", "7", "--b", "-1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("obstructed at 7"), "{text}");
}

#[test]
fn deductions() {
    let v = run(&["deduce", "hbn", "--constraints", &data("hbn_2_3.json")]);
    assert_eq!(
        v["vectors"],
        serde_json::json!([["0/1", "0/1"], ["1/2", "1/2"]])
    );
    assert_eq!(v["only_zero"], false);
    let v = run(&["deduce", "hbn", "--constraints", &data("hbn_coprime.json")]);
    assert_eq!(v["only_zero"], true);

    let v = run(&[
        "deduce",
        "corollary-q",
        "--genus",
        "5",
        "--section",
        "--bad-primes",
        "2,7",
    ]);
    assert_eq!(v["conclusions"].as_array().unwrap().len(), 2);
    let v = run(&["deduce", "corollary-q", "--genus", "2", "--bad-primes", "3"]);
    assert!(v["conclusions"].as_array().unwrap().is_empty());
}

#[test]
fn bad_input_fails_cleanly() {
    let out = Command::new(env!("CARGO_BIN_EXE_perind"))
        .args(["hilbert", "0", "3"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}
