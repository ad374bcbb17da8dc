use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_edge-depth"));
    for var in ["FIELD", "MAX_GENS", "MAX_LATTICE", "CACHE_DIR", "FORMAT", "SEED"] {
        c.env_remove(format!("EDGE_DEPTH_{var}"));
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn depths(out: &Output) -> Vec<u64> {
    let v: Value = serde_json::from_slice(&out.stdout).expect("json output");
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r["depth"].as_u64().unwrap())
        .collect()
}

#[test]
fn depth_examples() {
    let cases = [
        (r#"{"kind":"cycle","n":6,"weights":[2,1,2,1,2,1]}"#, "2", 2),
        (r#"{"kind":"cycle","n":5}"#, "1", 2),
        (r#"{"kind":"path","n":2,"weights":[1]}"#, "1", 1),
    ];
    for (graph, t, want) in cases {
        let out = run(&["depth", "--graph", graph, "--t", t, "--field", "both", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(depths(&out), vec![want, want], "{graph}");
    }
}

#[test]
fn graph_from_file_and_env_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, r#"{"kind":"general","n":4,"edges":[[1,2,1],[3,4,1]]}"#).unwrap();
    let out = bin()
        .env("EDGE_DEPTH_FORMAT", "json")
        .args(["depth", "--graph", &format!("@{}", path.display())])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(depths(&out), vec![2]);
}

#[test]
fn input_errors_exit_3() {
    for args in [
        vec!["depth", "--graph", "{not json"],
        vec!["depth", "--graph", r#"{"kind":"cycle","n":2}"#],
        vec!["depth", "--graph", r#"{"kind":"cycle","n":4}"#, "--t", "0"],
        vec!["table", "--family", "three-edge", "--n-min", "5", "--n-max", "5"],
        vec!["--max-gens", "0", "colon-suite"],
        vec!["no-such-command"],
    ] {
        assert_eq!(run(&args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn caps_exit_4() {
    let depth = run(&["depth", "--graph", r#"{"kind":"cycle","n":6}"#, "--t", "3", "--max-lattice", "5"]);
    assert_eq!(depth.status.code(), Some(4));
    let table = run(&["table", "--family", "trivial", "--n-min", "5", "--n-max", "5", "--t-max", "1", "--max-gens", "2"]);
    assert_eq!(table.status.code(), Some(4));
    let stdout = String::from_utf8(table.stdout).unwrap();
    assert!(stdout.lines().nth(1).unwrap().ends_with(",skipped,0"), "{stdout}");
}

#[test]
fn table_passes_and_reports_both_fields() {
    let out = run(&["table", "--family", "two-edge", "--n-min", "3", "--n-max", "5", "--t-max", "2", "--w1", "3", "--field", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = edge_depth_cli::table::read_rows_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.engine_gf2.is_some() && r.engine_gf2 == r.engine_rat));
    assert_eq!(rows[0].weights, vec![3, 1, 2]);
}

#[test]
fn suites_pass() {
    for args in [
        vec!["colon-suite"],
        vec!["closure-suite", "--max-n", "3", "--max-w", "2"],
        vec!["property-suite", "--seed", "11"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
