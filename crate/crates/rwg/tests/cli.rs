//! End-to-end runs of the `rwg` binary: exit codes, error objects and the
//! descriptor round trip.

use std::process::{Command, Output};

use serde_json::Value;

fn rwg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rwg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn analyze_catalog_entry() {
    let out = rwg(&["analyze", "catalog:g2:intermediate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["orders"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["total_order"], 4);
    assert_eq!(v["lattice"], "weight");
}

#[test]
fn lattice_switch_changes_sl2r() {
    let weight = json(&rwg(&["analyze", "catalog:sl2R:compactCSA"]));
    let root = json(&rwg(&["analyze", "catalog:sl2R:compactCSA", "--lattice", "root"]));
    assert_eq!(weight["total_order"], 1);
    assert_eq!(root["total_order"], 2);
}

#[test]
fn show_then_analyze_round_trip() {
    let shown = rwg(&["catalog", "show", "vogan:D4:swap:p2"]);
    assert_eq!(shown.status.code(), Some(0));
    let path = temp_file("d4.json", &String::from_utf8(shown.stdout).unwrap());
    let from_file = rwg(&["analyze", path.to_str().unwrap()]);
    let from_catalog = rwg(&["analyze", "catalog:vogan:D4:swap:p2"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_catalog.stdout);
}

#[test]
fn bad_input_exits_2_with_error_object() {
    let missing = rwg(&["analyze", "/nonexistent/descriptor.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(json(&missing)["error"]["kind"], "Io");

    let unknown = rwg(&["analyze", "catalog:no-such-entry"]);
    assert_eq!(unknown.status.code(), Some(2));

    let not_involution = temp_file("bad.json", r#"{"type":{"series":"A","rank":2},"theta":[[0,1],[0,1]]}"#);
    let out = rwg(&["analyze", not_involution.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = &json(&out)["error"];
    assert!(err["kind"].is_string() && err["message"].is_string());

    let malformed = temp_file("malformed.json", r#"{"type":{"series":"A","rank":2},"theta":[[1]]"#);
    let out = rwg(&["analyze", malformed.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Malformed"));
}

#[test]
fn oracle_exit_codes() {
    let ok = rwg(&["oracle", "catalog:vogan:B3:p1"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));
    assert_eq!(rwg(&["oracle", "catalog:compact:E8"]).status.code(), Some(3));
    let fuzz = rwg(&["oracle", "--fuzz", "12", "--rank", "2", "--format", "json"]);
    assert_eq!(fuzz.status.code(), Some(0));
    let v = json(&fuzz);
    assert_eq!(v["checks_failed"], 0);
    assert_eq!(v["data"].as_array().unwrap().len(), 12);
    assert_eq!(rwg(&["oracle", "--fuzz", "1", "--rank", "6"]).status.code(), Some(3));
}

#[test]
fn roots_table() {
    let out = rwg(&["roots", "--type", "B2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 8);
    assert_eq!(rwg(&["roots", "--type", "Z9"]).status.code(), Some(2));
}

#[test]
fn catalog_list_covers_every_type() {
    let out = rwg(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["compact:A1", "split:E8", "vogan:E6:swap", "sl2R:compactCSA", "g2:intermediate"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(id)), "{id}");
    }
}
