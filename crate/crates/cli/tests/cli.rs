use std::process::{Command, Output};

use serde_json::Value;
use stringy_core::algebra::format_rational;
use stringy_core::{engine, AdeType, RationalFunction};

fn stringy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringy")).args(args).output().expect("stringy runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    let out = stringy(&args);
    assert!(out.status.success(), "stringy {args:?} failed: {}", stderr(&out));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

/// Value of a `key  value` line in the text output.
fn text_field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(|rest| rest.trim().to_string()))
        .unwrap_or_else(|| panic!("no {key} line in:\n{text}"))
}

#[test]
fn local_e6() {
    let record = json(&["local", "E6"]);
    assert_eq!(record["e_number"], "67/40");
    assert_eq!(record["index"], "40");
    assert_eq!(record["details"]["edges"], 9);
    assert_eq!(record["details"]["triangles"], 5);
}

#[test]
fn local_a1() {
    let record = json(&["local", "A", "--n", "1"]);
    assert_eq!(record["e_number"], "2");
    assert_eq!(record["index"], "1");
}

#[test]
fn text_and_json_agree() {
    for args in [&["local", "D", "--n", "6"][..], &["local", "E7"], &["fiber-product", "8xI:7", "2xII"]] {
        let text = stdout(&stringy(args));
        let record = json(args);
        assert_eq!(text_field(&text, "e_str"), record["e_number"].as_str().unwrap(), "{args:?}");
        assert_eq!(text_field(&text, "index"), record["index"].as_str().unwrap(), "{args:?}");
    }
}

#[test]
fn local_record_roundtrips() {
    let record = json(&["local", "D", "--n", "6"]);
    let f: RationalFunction = serde_json::from_value(record["e_function"].clone()).unwrap();
    let expected = engine::compute(AdeType::D(6)).unwrap();
    assert_eq!(f, expected.e_function);
    assert_eq!(serde_json::to_value(&f).unwrap(), record["e_function"]);
    assert_eq!(record["e_number"], format_rational(&expected.e_number));
    assert_eq!(record["e_number"], format_rational(&f.limit_at_one().unwrap()));
}

#[test]
fn local_record_lists_route_checks() {
    let record = json(&["local", "E8"]);
    let checks = record["verification"].as_array().unwrap();
    for name in ["routes-oracle", "routes-closed-form", "limit-vs-direct", "series-integrality"] {
        let c = checks.iter().find(|c| c["check"] == name).unwrap();
        assert_eq!(c["passed"], true, "{name}");
    }
}

#[test]
fn bad_type_is_a_usage_error() {
    for args in [&["local", "D", "--n", "3"][..], &["local", "A", "--n", "0"], &["local", "Q"], &["local", "D"]] {
        let out = stringy(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains("n >= 4"), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn dot_export() {
    let path = std::env::temp_dir().join(format!("stringy-d4-{}.dot", std::process::id()));
    let out = stringy(&["local", "D", "--n", "4", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("graph D4 {"));
    assert!(dot.contains("a=3)"));
}

#[test]
fn global_ci_nodal_examples() {
    assert_eq!(json(&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x125"])["e_number"], "50");
    assert_eq!(json(&["global-ci", "--r", "4", "--degrees", "3", "--sing", "A:1x10"])["e_number"], "14");
    let record = json(&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x130"]);
    assert_eq!(record["e_number"], "60");
    assert_eq!(record["details"]["smooth_euler"], "-200");
    assert_eq!(record["details"]["contributions"][0]["total"], "260");
}

#[test]
fn global_ci_text_breakdown() {
    let text = stdout(&stringy(&["global-ci", "--r", "5", "--degrees", "2,2", "--sing", "A:5x1"]));
    assert_eq!(text_field(&text, "e_str"), "6");
    assert_eq!(text_field(&text, "smooth_euler"), "0");
}

#[test]
fn malformed_singularity_token_is_named() {
    let out = stringy(&["global-ci", "--r", "4", "--degrees", "5", "--sing", "A:1x125,B2x3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("B2x3"), "{}", stderr(&out));
    let out = stringy(&["global-ci", "--r", "5", "--degrees", "5", "--sing", "A:1x1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fiber_products() {
    assert_eq!(json(&["fiber-product", "5xI:7", "5xII"])["e_number"], "82");
    let record = json(&["fiber-product", "8xI:7", "2xII"]);
    assert_eq!(record["e_number"], "584/5");
    assert_eq!(record["details"]["nodes"], 56);
    assert_eq!(record["verification"][0]["passed"], true);
    assert_eq!(json(&["fiber-product"])["e_number"], "0");
}

#[test]
fn unsupported_kodaira_type() {
    let out = stringy(&["fiber-product", "3xIII"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("I:<b'> and II"), "{}", stderr(&out));
}

#[test]
fn verify_scope_filter() {
    let out = stringy(&["verify", "--scope", "local", "--max-n", "4", "--format", "json"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let types: Vec<&str> = report["types"].as_array().unwrap().iter().map(|t| t.as_str().unwrap()).collect();
    assert_eq!(types, ["A_1", "A_2", "A_3", "A_4", "D_4", "E_6", "E_7", "E_8"]);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| !c["name"].as_str().unwrap().starts_with("global")));
    for name in ["graph-validation", "routes-oracle", "routes-closed-form", "limit-vs-direct", "series-integrality", "link-hodge"] {
        let c = checks.iter().find(|c| c["name"] == name).unwrap();
        assert_eq!(c["passed"], true, "{name}");
    }
}

#[test]
fn verify_text_is_sorted_by_check() {
    let text = stdout(&stringy(&["verify", "--scope", "global"]));
    let names: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("PASS ").or_else(|| l.strip_prefix("FAIL ")))
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert!(names.contains(&"global-fiber-routes"));
}

#[test]
fn verify_detects_corrupted_e7_edge() {
    let out = stringy(&["verify", "--scope", "local", "--max-n", "4", "--corrupt", "E7/edge/0"]);
    assert_ne!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("FAIL graph-validation"), "{text}");
    assert!(text.contains("FAIL routes-closed-form"), "{text}");
    assert!(text.contains("E_7"), "{text}");
}

#[test]
fn table_a() {
    let out = stringy(&["table", "A", "1", "10"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 10);
    for row in &rows {
        let n: u32 = row[col("n")].parse().unwrap();
        if n % 2 == 1 {
            assert_eq!((row[col("e_str")].as_str(), row[col("index")].as_str()), ("2", "1"));
        }
        if n == 6 {
            assert_eq!((row[col("e_str")].as_str(), row[col("index")].as_str()), ("5/3", "3"));
        }
    }
}

#[test]
fn table_d_json_matches_library() {
    let out = stringy(&["table", "D", "4", "10", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 7);
    let d6 = rows.iter().find(|r| r["n"] == 6).unwrap();
    let e = engine::compute(AdeType::D(6)).unwrap().e_number;
    assert_eq!(d6["e_str"], format_rational(&e));
    assert!(rows.iter().all(|r| r["index_in_table"] == true));
}

#[test]
fn table_registry() {
    let out = stringy(&["table", "registry", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 9);
    let schoen = rows.iter().find(|r| r["name"] == "Schoen quintic").unwrap();
    assert_eq!(schoen["e_str"], "50");
    assert_eq!(schoen["matches"], true);
}

#[test]
fn table_bad_range() {
    for args in [&["table", "D", "2", "8"][..], &["table", "A", "9", "3"], &["table", "B", "1", "3"], &["table", "A"]] {
        assert_eq!(stringy(args).status.code(), Some(2), "{args:?}");
    }
}
