mod common;

use std::process::{Command, Output};

use common::fixture_path;

fn ringline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringline"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ring_show_json_matches_fixture_tables() {
    let o = ringline(&["ring", "show", "m2f2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let got: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture_path("m2f2_tables.json")).unwrap())
            .unwrap();
    assert_eq!(got["schema"], 1);
    assert_eq!(got["add_table"], want["add_table"]);
    assert_eq!(got["mul_table"], want["mul_table"]);
}

#[test]
fn every_ring_validates() {
    for name in ["m2f2", "gf2", "gf4", "gf2xgf2", "gf2-dual"] {
        let o = ringline(&["ring", "validate", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).contains("valid"));
    }
}

#[test]
fn line_enumerate_lists_35_points() {
    let o = ringline(&["line", "enumerate", "--ring", "m2f2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 35);
    let text = stdout(&ringline(&["line", "enumerate", "--ring", "m2f2"]));
    assert!(text.starts_with("projective line over m2f2: 35 points"));
}

#[test]
fn exported_relation_csv_equals_reference() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("relation.csv");
    let o = ringline(&[
        "export",
        "--what",
        "subconfig",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let got = std::fs::read_to_string(out).unwrap();
    let want = std::fs::read_to_string(fixture_path("relation_table.csv")).unwrap();
    assert_eq!(got.trim_end(), want.trim_end());
}

#[test]
fn other_base_points_also_give_fifteen() {
    let o = ringline(&[
        "line",
        "subconfig",
        "--u",
        "1,1",
        "--v",
        "3,1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 15);
}

#[test]
fn dot_uses_point_labels() {
    let o = ringline(&["line", "subconfig", "--format", "dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("graph \"subconfiguration\" {"));
    assert!(text.contains("\"C1\" -- \"C2\";"));
    assert!(!text.contains("\"C1\" -- \"C5\";"));
    let text = stdout(&ringline(&[
        "line",
        "subconfig",
        "--format",
        "dot",
        "--edges",
        "distant",
    ]));
    assert!(text.contains("\"C1\" -- \"C5\";"));
    assert!(!text.contains("\"C1\" -- \"C2\";"));
}

#[test]
fn verify_all_passes() {
    let o = ringline(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# ringline verification certificate\n"));
    assert!(text.contains("RESULT: PASS"));
    assert!(!text.contains("FAIL  "));
}

#[test]
fn verify_targets_pass() {
    for t in ["table2", "factor96", "factor105", "trinity"] {
        let o = ringline(&["verify", t, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{t}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn corrupted_fixture_gives_diff_and_exit_1() {
    let text = std::fs::read_to_string(fixture_path("relation_table.csv")).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    // C3,C7 is '+' in the reference
    let mut cells: Vec<String> = lines[3].split(',').map(String::from).collect();
    assert_eq!(cells[7], "+");
    cells[7] = "-".into();
    lines[3] = cells.join(",");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, lines.join("\n")).unwrap();

    let o = ringline(&["verify", "table2", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("reference vs geometry: C3,C7 expected - got +"),
        "{out}"
    );
    assert!(out.contains("RESULT: FAIL"));
    let o = ringline(&["verify", "all", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_fixture_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, ",C1,C2\nC1,-,+\nC2,+,-\n").unwrap();
    let o = ringline(&["verify", "table2", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = ringline(&[
        "verify",
        "table2",
        "--fixture",
        dir.path().join("missing.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ringline(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        ringline(&["ring", "show", "m2f2", "--colour"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ringline(&["ring", "show", "zz"]).status.code(), Some(2));
    assert_eq!(
        ringline(&["pauli", "mub", "--spread", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ringline(&["line", "subconfig", "--u", "3,4"]).status.code(),
        Some(2)
    );
    assert_eq!(ringline(&["--version"]).status.code(), Some(0));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "all", "--no-header"][..],
        &["gq", "hyperplanes", "--format", "json"],
        &["pauli", "mub", "--format", "json"],
        &["gq", "petersen", "--ovoid", "3", "--format", "dot"],
    ] {
        let a = ringline(args);
        let b = ringline(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn no_header_drops_only_the_header() {
    let with = stdout(&ringline(&["verify", "table2"]));
    let without = stdout(&ringline(&["verify", "table2", "--no-header"]));
    assert_eq!(
        with,
        format!("# ringline verification certificate\n{without}")
    );
}

#[test]
fn pauli_commands() {
    let o = ringline(&["pauli", "mermin"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("magic: true"));
    let o = ringline(&["pauli", "table", "--format", "csv"]);
    let want = std::fs::read_to_string(fixture_path("relation_table.csv")).unwrap();
    assert_eq!(stdout(&o).trim_end(), want.trim_end());
    let o = ringline(&["pauli", "mub", "--spread", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("spread 2: "));
}

#[test]
fn gq_commands() {
    for action in [
        "build",
        "axioms",
        "ovoids",
        "spreads",
        "hyperplanes",
        "petersen",
    ] {
        let o = ringline(&["gq", action, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{action}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["schema"], 1, "{action}");
    }
    let v: serde_json::Value =
        serde_json::from_slice(&ringline(&["gq", "ovoids", "--format", "json"]).stdout).unwrap();
    assert_eq!(
        v["ovoids"][0],
        serde_json::json!(["C1", "C5", "C9", "C10", "C14"])
    );
}
