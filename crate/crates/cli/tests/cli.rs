use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env_remove("SPECTRA_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn strict_check_rejects_triangle() {
    let o = spectra(&["check", "Bw", "--matrix", "adjacency", "--strict"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("k = 2 of n = 3"), "{text}");
    assert!(text.contains("result: FAIL"));
}

#[test]
fn descriptive_check_accepts_triangle() {
    let o = spectra(&["check", "Bw", "--matrix", "adjacency"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("result: PASS"));
}

#[test]
fn bad_graphs_are_usage_errors() {
    for g in ["@", "P3x", "Bg?", "B?"] {
        let o = spectra(&["check", g]);
        assert_eq!(code(&o), 2, "{g}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn check_json_output() {
    let o = spectra(&["check", "D?{", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["passed"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    let adj = &checks[0];
    assert_eq!(adj["kind"], "adjacency");
    assert_eq!(adj["k"], 3);
    assert!((adj["coefficient_b"].as_f64().unwrap() - 8.0).abs() < 1e-9);
}

#[test]
fn census_n3_adjacency() {
    let o = spectra(&[
        "census",
        "--n",
        "3",
        "--matrix",
        "adjacency",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let s: Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &s["rows"][0];
    assert_eq!(row["examined"], 8);
    assert_eq!(row["connected"], 4);
    assert_eq!(row["distinct"], 3);
}

#[test]
fn census_n4_laplacian() {
    let o = spectra(&["census", "--n", "4", "--matrix", "laplacian"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let row = text.lines().find(|l| l.contains("laplacian")).unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cols[3], "38");
    assert_eq!(cols[6], "0");
    assert!(text.contains("result: OK"));
}

#[test]
fn census_input_files() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(
        code(&spectra(&["census", "--input", empty.to_str().unwrap()])),
        0
    );

    let good = dir.path().join("good.g6");
    std::fs::write(&good, "# small graphs\nBw\n\nD?{\nCF\n").unwrap();
    let o = spectra(&[
        "census",
        "--input",
        good.to_str().unwrap(),
        "--emit-records",
    ]);
    assert_eq!(code(&o), 0);
    // header plus 3 graphs times 4 kinds
    assert_eq!(stdout(&o).lines().count(), 13);

    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "Bw\nzz\n").unwrap();
    let o = spectra(&["census", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));

    let missing = dir.path().join("missing.g6");
    assert_eq!(
        code(&spectra(&["census", "--input", missing.to_str().unwrap()])),
        2
    );
}

#[test]
fn census_size_limits() {
    assert_eq!(code(&spectra(&["census", "--n", "8"])), 2);
    assert_eq!(code(&spectra(&["census", "--n", "9", "--allow-n8"])), 2);
    assert_eq!(code(&spectra(&["census"])), 2);
}

fn csv_records(dir: &Path, jobs: &str) -> Vec<u8> {
    let out = dir.join(format!("records-{jobs}.csv"));
    let o = spectra(&[
        "census",
        "--n",
        "5",
        "--jobs",
        jobs,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    std::fs::read(out).unwrap()
}

#[test]
fn census_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let one = csv_records(dir.path(), "1");
    let three = csv_records(dir.path(), "3");
    assert_eq!(one, three);
    let text = String::from_utf8(one).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph6,n,m,kind,k,distinct,diam,diam_ok,invol_ok,res_i,res_ii,gap"
    );
    assert_eq!(lines.count(), 728 * 4);
}

#[test]
fn census_json_envelope() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("records.json");
    let o = spectra(&[
        "census",
        "--n",
        "4",
        "--matrix",
        "signless",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    let columns: Vec<&str> = doc["columns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 38);
    for r in records {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = columns.clone();
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
    }
    assert_eq!(doc["summary"]["rows"][0]["connected"], 38);
}

#[test]
fn demo_reproduces_counterexample() {
    let o = spectra(&["demo"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("f(B) = [[16,5,10],[0,6,0],[10,0,6]]"));
    assert!(text.contains("charpoly(f(B))(6) = 0"));
}
