//! End-to-end tests of the binary: JSON shape, exit codes, determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn permadd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permadd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = permadd(args);
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn decompose_c15() {
    let r = report(&["decompose", "--group", "C15", "--q", "2"]);
    assert_eq!(r["result"]["component_sizes"], serde_json::json!([2, 16, 16, 16, 4]));
    assert_eq!(r["result"]["num_components"], 5);
}

#[test]
fn analyze_c15_rows() {
    for (support, rate, degree) in [("2,3,4", "12/15", 6), ("2,3", "8/15", 3), ("2", "4/15", 1)] {
        let r = report(&["analyze", "--group", "C15", "--q", "2", "--support", support]);
        assert_eq!(r["result"]["rate"], rate);
        assert_eq!(r["result"]["degree"], degree);
    }
}

#[test]
fn table1_rows_and_bounds() {
    let r = report(&["table1"]);
    let rows = r["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    let bounds: Vec<i64> = rows
        .iter()
        .filter(|row| row["support"].is_string())
        .map(|row| row["degree"].as_i64().unwrap())
        .collect();
    assert_eq!(bounds, vec![7, 3]);
}

#[test]
fn solve_verify_run_pipeline() {
    let dir = std::env::temp_dir().join(format!("permadd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gen = report(&["gen", "butterfly"]);
    let net_path = dir.join("net.json");
    std::fs::write(&net_path, gen["result"]["network"].to_string()).unwrap();
    let net = net_path.to_str().unwrap();

    let solve = report(&[
        "solve", "--network", net, "--group", "C7", "--q", "2", "--support", "2,3",
    ]);
    assert_eq!(solve["result"]["verified"], true);
    assert_eq!(solve["result"]["rate"], "6/7");
    assert!(solve["result"]["degree"].as_u64().unwrap() <= 3);

    let code_path = dir.join("code.json");
    std::fs::write(&code_path, solve["result"]["code"].to_string()).unwrap();
    let code = code_path.to_str().unwrap();

    let verify = report(&["verify", "--network", net, "--code", code]);
    assert_eq!(verify["result"]["verified"], true);

    // tamper: drop all decoding entries, verification must fail with exit 1
    let mut spec: Value = serde_json::from_str(&std::fs::read_to_string(&code_path).unwrap()).unwrap();
    spec["decoding"] = serde_json::json!([]);
    let bad_path = dir.join("bad.json");
    std::fs::write(&bad_path, spec.to_string()).unwrap();
    let out = permadd(&["verify", "--network", net, "--code", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let bad: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(bad["result"]["verified"], false);
    assert!(bad["result"]["counterexample"].is_object());

    // a concrete seeded run decodes everything
    let run = report(&["run", "--network", net, "--code", code, "--seed", "42"]);
    assert_eq!(run["result"]["all_correct"], true);

    // explicit messages: two codewords of the ideal, given as index vectors
    let msgs_path = dir.join("msgs.json");
    std::fs::write(&msgs_path, "[[0,0,0,0,0,0,0],[1,1,0,0,0,0,0]]").unwrap();
    let run2 = report(&[
        "run", "--network", net, "--code", code, "--messages", msgs_path.to_str().unwrap(),
    ]);
    assert_eq!(run2["result"]["all_correct"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reports_are_byte_deterministic() {
    let a = permadd(&["table1"]);
    let b = permadd(&["table1"]);
    assert_eq!(a.stdout, b.stdout);
    let c = permadd(&["decompose", "--group", "C3xC3", "--q", "2"]);
    let d = permadd(&["decompose", "--group", "C3xC3", "--q", "2"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn exit_codes() {
    // usage error
    assert_eq!(permadd(&["analyze", "--group", "C15"]).status.code(), Some(2));
    // bad input file
    assert_eq!(
        permadd(&["verify", "--network", "/nonexistent", "--code", "/nonexistent"])
            .status
            .code(),
        Some(2)
    );
    // desk-scale guard: group order above the supported bound
    let out = permadd(&["decompose", "--group", "C1048577", "--q", "2"]);
    assert_eq!(out.status.code(), Some(3));
}
