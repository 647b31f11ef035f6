//! End-to-end tests of the `joinli` binary: exit codes, JSON round-trips,
//! and validity of verdict output against the shipped schema.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn joinli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_joinli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("joinli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("write temp file");
    path
}

fn parity_dfa_json() -> &'static str {
    r#"{"alphabet":["a"],"states":2,"initial":0,"finals":[0],"delta":[[1],[0]]}"#
}

#[test]
fn build_output_feeds_every_verb() {
    let built = joinli(&["build", "--alphabet", "ab", "subword", "b"]);
    assert_eq!(built.status.code(), Some(0));
    let dfa_path = write_temp("contains-b.json", &stdout(&built));
    let dfa_str = dfa_path.to_str().unwrap();

    for args in [
        vec!["synmon", dfa_str],
        vec!["stability", dfa_str],
        vec!["essquo", dfa_str],
        vec!["variety", "J1", dfa_str],
        vec!["join-li", "J", dfa_str],
    ] {
        let out = joinli(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn join_li_positive_and_negative_exit_codes() {
    // b Σ* b Σ*: starts with b and has a second b
    let b_then_b = write_temp(
        "b-then-b.json",
        r#"{"alphabet":["a","b"],"states":4,"initial":0,"finals":[2],
            "delta":[[3,1],[1,2],[2,2],[3,3]]}"#,
    );
    let out = joinli(&["join-li", "J", b_then_b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("yes"));

    let parity = write_temp("parity.json", parity_dfa_json());
    let out = joinli(&["join-li", "J", parity.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "negative decisions exit 1");
    let out = joinli(&["join-li", "G", parity.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn join_li_refuses_j1_with_exit_2() {
    let parity = write_temp("parity-j1.json", parity_dfa_json());
    let out = joinli(&["join-li", "J1", parity.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("criterion (A) fails"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn verdict_json_validates_against_the_shipped_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schemas/join_verdict.schema.json"))
        .expect("schema parses");
    let parity = write_temp("parity-schema.json", parity_dfa_json());
    for variety in ["J", "G", "Com"] {
        let out = joinli(&["--json", "join-li", variety, parity.to_str().unwrap()]);
        assert!(matches!(out.status.code(), Some(0 | 1)));
        let verdict: Value = serde_json::from_str(&stdout(&out)).expect("verdict is JSON");
        validate(&schema, &verdict, "verdict");
    }
}

/// Minimal validator for the subset of JSON Schema the shipped file uses:
/// type, required, properties, additionalProperties, enum, minimum,
/// minItems, items.
fn validate(schema: &Value, value: &Value, path: &str) {
    if let Some(allowed) = schema.get("enum") {
        assert!(
            allowed.as_array().unwrap().contains(value),
            "{path}: {value} not in enum {allowed}"
        );
        return;
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = value
                .as_object()
                .unwrap_or_else(|| panic!("{path}: expected object"));
            let props = schema.get("properties").and_then(Value::as_object);
            if let Some(required) = schema.get("required").and_then(Value::as_array) {
                for key in required {
                    assert!(
                        obj.contains_key(key.as_str().unwrap()),
                        "{path}: missing required key {key}"
                    );
                }
            }
            for (key, sub) in obj {
                let sub_schema = props.and_then(|p| p.get(key));
                match sub_schema {
                    Some(s) => validate(s, sub, &format!("{path}.{key}")),
                    None => match schema.get("additionalProperties") {
                        Some(Value::Bool(false)) => panic!("{path}: unexpected key {key}"),
                        Some(extra) if extra.is_object() => {
                            validate(extra, sub, &format!("{path}.{key}"))
                        }
                        _ => {}
                    },
                }
            }
        }
        Some("array") => {
            let arr = value
                .as_array()
                .unwrap_or_else(|| panic!("{path}: expected array"));
            if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
                assert!(arr.len() as u64 >= min, "{path}: fewer than {min} items");
            }
            if let Some(items) = schema.get("items") {
                for (i, item) in arr.iter().enumerate() {
                    validate(items, item, &format!("{path}[{i}]"));
                }
            }
        }
        Some("integer") => {
            let n = value
                .as_i64()
                .unwrap_or_else(|| panic!("{path}: expected integer"));
            if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
                assert!(n >= min, "{path}: {n} below minimum {min}");
            }
        }
        Some("boolean") => assert!(value.is_boolean(), "{path}: expected boolean"),
        Some("string") => assert!(value.is_string(), "{path}: expected string"),
        other => panic!("{path}: unhandled schema type {other:?}"),
    }
}

#[test]
fn uofe_prints_the_wrapped_identity() {
    let out = joinli(&["uofe", "(a b)^w a = (a b)^w"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "x^w y (a b)^w a z t^w = x^w y (a b)^w z t^w"
    );
}

#[test]
fn check_identity_exit_codes_and_modes() {
    let parity = write_temp("parity-check.json", parity_dfa_json());
    let sat = joinli(&[
        "check-identity",
        "x^w = 1",
        "--mode",
        "all",
        parity.to_str().unwrap(),
    ]);
    assert_eq!(sat.status.code(), Some(0));
    let unsat = joinli(&[
        "check-identity",
        "x^w x = x^w",
        "--mode",
        "all",
        parity.to_str().unwrap(),
    ]);
    assert_eq!(unsat.status.code(), Some(1));

    // monoid input in all mode works, ne mode is a usage error
    let z2 = write_temp(
        "z2.json",
        r#"{"size":2,"identity":0,"table":[[0,1],[1,0]]}"#,
    );
    let ok = joinli(&[
        "check-identity",
        "x y = y x",
        "--mode",
        "all",
        z2.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = joinli(&[
        "check-identity",
        "x y = y x",
        "--mode",
        "ne",
        z2.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        joinli(&["join-li", "Q", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        joinli(&["synmon", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(joinli(&["demo", "nope"]).status.code(), Some(2));
    assert_eq!(joinli(&["frobnicate"]).status.code(), Some(2));
    let bad_json = write_temp("bad.json", "{\"alphabet\": []}");
    assert_eq!(
        joinli(&["synmon", bad_json.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn demo_j1_succeeds_in_both_formats() {
    let text = joinli(&["demo", "j1"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("refuted at"));
    let json = joinli(&["--json", "demo", "j1"]);
    assert_eq!(json.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&json)).expect("report is JSON");
    assert_eq!(report["candidate_count"], 16);
    assert_eq!(report["essentially_j1"], true);
}

#[test]
fn witness_subcommands_round_trip() {
    let mono = write_temp(
        "mono.json",
        r#"{"alphabet":["a","b"],"monomials":[{"sets":[["b"],["a","b"]],"letters":["a"]}],"mode":"R"}"#,
    );
    let out = joinli(&[
        "witness",
        "r",
        mono.to_str().unwrap(),
        "--x",
        "b",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("verify"));
    let witness: Value = serde_json::from_str(&stdout(&out)).expect("witness is a DFA JSON");
    assert!(witness.get("delta").is_some());

    let parity = write_temp("parity-witness.json", parity_dfa_json());
    let group = joinli(&["witness", "group", parity.to_str().unwrap(), "--x", "a"]);
    assert_eq!(group.status.code(), Some(0));

    let contains_b = stdout(&joinli(&["build", "--alphabet", "ab", "subword", "b"]));
    let pt = write_temp("pt.json", &contains_b);
    let missing_k = joinli(&["witness", "j", pt.to_str().unwrap(), "--x", "a"]);
    assert_eq!(missing_k.status.code(), Some(2));
    let with_k = joinli(&["witness", "j", pt.to_str().unwrap(), "--x", "a", "--k", "1"]);
    assert_eq!(with_k.status.code(), Some(0));

    // non-group input for the group family is an input error
    let not_group = joinli(&["witness", "group", pt.to_str().unwrap(), "--x", "a"]);
    assert_eq!(not_group.status.code(), Some(2));
}

#[test]
fn verify_flag_reports_checks_on_stderr() {
    let parity = write_temp("parity-verify.json", parity_dfa_json());
    for args in [
        vec!["--verify", "stability", parity.to_str().unwrap()],
        vec!["--verify", "essquo", parity.to_str().unwrap()],
        vec!["--verify", "join-li", "G", parity.to_str().unwrap()],
        vec!["--verify", "synmon", parity.to_str().unwrap()],
    ] {
        let out = joinli(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        assert!(
            stderr(&out).contains("ok"),
            "{args:?} must report its checks"
        );
    }
}

#[test]
fn output_is_deterministic() {
    let parity = write_temp("parity-det.json", parity_dfa_json());
    let first = joinli(&["--json", "join-li", "J", parity.to_str().unwrap()]);
    let second = joinli(&["--json", "join-li", "J", parity.to_str().unwrap()]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(first.status.code(), second.status.code());
}

#[test]
fn profile_cap_env_is_honoured() {
    let contains_b = stdout(&joinli(&["build", "--alphabet", "ab", "subword", "b"]));
    let pt = write_temp("pt-cap.json", &contains_b);
    let out = Command::new(env!("CARGO_BIN_EXE_joinli"))
        .args(["witness", "j", pt.to_str().unwrap(), "--x", "a", "--k", "1"])
        .env("JOINLI_PROFILE_STATE_CAP", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("state cap"));
}
