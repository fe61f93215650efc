use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sigspec::io::parse_graph;
use sigspec::Sign;

fn sigspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigspec"))
        .args(args)
        .env_remove("SIGSPEC_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_all_negative_triangle() {
    let out = sigspec(&["gen", "--family", "cycle", "--n", "3", "--signs", "---"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mg = parse_graph(&text).unwrap();
    assert_eq!(mg.graph().edge_count(), 3);
    assert!(mg.graph().edges().all(|e| e.sign == Sign::Minus));
}

#[test]
fn charpoly_of_k2() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1 +\n");
    let out = sigspec(&["charpoly", &k2, "--matrix", "a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["charpoly"]["text"], "x^2 - 1");
    let out = sigspec(&["charpoly", &k2, "--matrix", "l"]);
    assert_eq!(json(&out)["result"]["charpoly"]["text"], "x^2 - 2x");
}

#[test]
fn malformed_input_exits_one_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "# header next\n2 1\n0 0 +\n");
    let out = sigspec(&["energy", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("self-loop"), "{err}");

    let out = sigspec(&["gen", "--family", "cycle", "--n", "4", "--signs", "+-"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sigspec(&["gen", "--family", "path", "--n", "3", "--marking", "++"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sigspec(&["energy", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verification_failure_exits_two() {
    let out = sigspec(&["verify-theorem", "--which", "l", "--trials", "8", "--degree-mode", "paper"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v["result"]["failed"].as_u64().unwrap() > 0);
    let out = sigspec(&["verify-theorem", "--which", "q", "--trials", "8"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seed_flag_and_env_fallback() {
    let args = ["verify-theorem", "--which", "a", "--trials", "5"];
    let with_env = Command::new(env!("CARGO_BIN_EXE_sigspec"))
        .args(args)
        .env("SIGSPEC_SEED", "41")
        .output()
        .unwrap();
    let with_flag = sigspec(&[&args[..], &["--seed", "41"]].concat());
    assert_eq!(with_env.stdout, with_flag.stdout);
    assert_ne!(sigspec(&args).stdout, with_flag.stdout);
    assert_eq!(json(&with_flag)["result"]["seed"], 41);
}

#[test]
fn product_writes_graph_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1 +\n");
    let out_path = dir.path().join("prod.txt");
    let out = sigspec(&["product", &k2, &k2, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["vertices"], 8);
    assert_eq!(v["result"]["edges"], 14);
    let mg = parse_graph(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(mg.n(), 8);
}

#[test]
fn coronal_and_spectrum_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.txt", "3 3\n0 1 -\n1 2 -\n0 2 -\n");
    let v = json(&sigspec(&["coronal", &c3]));
    assert_eq!(v["result"]["coronal"], "3 / x - 2");
    assert_eq!(v["result"]["r"]["text"], "x^2 + 2x + 1");
    let v = json(&sigspec(&["coronal", &c3, "--of", "graph"]));
    assert_eq!(v["result"]["coronal"], "3 / x + 2");
    let v = json(&sigspec(&["spectrum", &c3]));
    assert_eq!(v["result"]["charpoly"]["text"], "x^3 - 3x + 2");
    assert_eq!(v["result"]["integral"], true);
    let ev: Vec<f64> = serde_json::from_value(v["result"]["eigenvalues"].clone()).unwrap();
    assert!((ev[0] - 1.0).abs() < 1e-10 && (ev[2] + 2.0).abs() < 1e-10);
}

#[test]
fn cospectral_family_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write(dir.path(), "p.txt", "3 3\n0 1 +\n1 2 +\n0 2 +\n");
    let neg = write(dir.path(), "n.txt", "3 3\n0 1 -\n1 2 -\n0 2 -\n");
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1 +\n");
    let out = sigspec(&["cospectral-family", &pos, &neg, &k2]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["pass"], true);

    let out = sigspec(&["integral-search", "--max-n1", "2", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["disagreements"], 0);
    let out = sigspec(&["integral-search", "--family", "cycle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn timings_only_on_request() {
    let args = ["verify-theorem", "--which", "a", "--trials", "2"];
    assert!(json(&sigspec(&args)).get("timings_ms").is_none());
    assert!(json(&sigspec(&[&args[..], &["--timings"]].concat())).get("timings_ms").is_some());
}
