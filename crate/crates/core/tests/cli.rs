//! End-to-end tests of the `sinrh` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn sinrh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinrh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_file(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

const CROSS_NETWORK: &str =
    r#"{"stations": [[0,0],[1,0],[0,1],[-1,0],[0,-1]], "alpha": 4.0, "beta": 1.0}"#;

#[test]
fn gen_hypergraph_cross_layout() {
    let dir = TempDir::new().unwrap();
    let net = write_file(&dir, "net.json", CROSS_NETWORK);
    let out = sinrh(&["gen-hypergraph", &net]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#
    );
}

#[test]
fn gen_hypergraph_out_file_matches_stdout() {
    let dir = TempDir::new().unwrap();
    let net = write_file(&dir, "net.json", CROSS_NETWORK);
    let out_path = dir.path().join("h.json");
    let out = sinrh(&["gen-hypergraph", &net, "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let piped = sinrh(&["gen-hypergraph", &net]);
    assert_eq!(fs::read_to_string(&out_path).unwrap(), stdout(&piped));
}

#[test]
fn sigma_star5_and_complete_5_3() {
    let dir = TempDir::new().unwrap();
    let star5 = write_file(
        &dir,
        "star5.json",
        r#"{"n":6,"edges":[[0,1],[0,2],[0,3],[0,4],[0,5]]}"#,
    );
    let out = sinrh(&["sigma", &star5]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("sigma = 5 ="));

    let edges: Vec<Vec<usize>> = (0..5)
        .flat_map(|a| ((a + 1)..5).flat_map(move |b| ((b + 1)..5).map(move |c| vec![a, b, c])))
        .collect();
    let k53 = write_file(
        &dir,
        "k53.json",
        &serde_json::json!({"n": 5, "edges": edges}).to_string(),
    );
    let out = sinrh(&["sigma", &k53]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("sigma = 3/2 ="));
}

#[test]
fn udg_cross_layout() {
    let dir = TempDir::new().unwrap();
    let net = write_file(&dir, "net.json", CROSS_NETWORK);
    let out = sinrh(&["udg", &net]);
    assert!(out.status.success());
    // Center-leaf distances are exactly 1 (included); leaf-leaf exceed 1.
    assert_eq!(
        stdout(&out).trim(),
        r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#
    );
}

#[test]
fn realize_star2_succeeds() {
    let dir = TempDir::new().unwrap();
    let star2 = write_file(&dir, "star2.json", r#"{"n":3,"edges":[[0,1],[0,2]]}"#);
    let out = sinrh(&["realize", &star2, "--restarts", "50", "--seed", "7"]);
    assert!(out.status.success());
    let result: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(result["found"], serde_json::Value::Bool(true));
    assert!(result["network"].is_object());
}

#[test]
fn verify_lemmas_small_run_passes() {
    let out = sinrh(&["verify-lemmas", "--trials", "50", "--grid", "101", "--seed", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 6);
    assert!(text.lines().all(|line| line.starts_with("PASS ")));
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = write_file(&dir, "bad.json", "{not json");
    let out = sinrh(&["sigma", &bad]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("nope.json");
    let out = sinrh(&["gen-hypergraph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let invalid = write_file(&dir, "inv.json", r#"{"n":2,"edges":[[0,5]]}"#);
    let out = sinrh(&["sigma", invalid.as_str()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_limits_exit_3() {
    let dir = TempDir::new().unwrap();
    // 25 stations exceeds the station cap.
    let stations: Vec<[f64; 2]> = (0..25).map(|i| [i as f64 * 3.0, 0.0]).collect();
    let big_net = write_file(
        &dir,
        "big.json",
        &serde_json::json!({"stations": stations, "alpha": 4.0, "beta": 1.0}).to_string(),
    );
    let out = sinrh(&["gen-hypergraph", &big_net]);
    assert_eq!(out.status.code(), Some(3));

    // 21 vertices exceeds the interference-degree cap.
    let big_h = write_file(&dir, "bigh.json", r#"{"n":21,"edges":[[0,1]]}"#);
    let out = sinrh(&["sigma", &big_h]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_across_runs() {
    let dir = TempDir::new().unwrap();
    let star3 = write_file(&dir, "star3.json", r#"{"n":4,"edges":[[0,1],[0,2],[0,3]]}"#);
    let a = sinrh(&["realize", &star3, "--restarts", "50", "--seed", "11"]);
    let b = sinrh(&["realize", &star3, "--restarts", "50", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_lemmas_is_deterministic() {
    let a = sinrh(&["verify-lemmas", "--trials", "30", "--grid", "51", "--seed", "9"]);
    let b = sinrh(&["verify-lemmas", "--trials", "30", "--grid", "51", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn paths_do_not_leak_into_canonical_output() {
    // Canonical JSON stays byte-identical regardless of where inputs live.
    let dir_a = TempDir::new().unwrap();
    let dir_b = TempDir::new().unwrap();
    let net_a = write_file(&dir_a, "a.json", CROSS_NETWORK);
    let net_b = write_file(&dir_b, "b.json", CROSS_NETWORK);
    assert_eq!(
        sinrh(&["gen-hypergraph", &net_a]).stdout,
        sinrh(&["gen-hypergraph", &net_b]).stdout
    );
    assert!(Path::new(&net_a) != Path::new(&net_b));
}
