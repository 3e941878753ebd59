//! End-to-end checks of the command-line surface: exit codes, format
//! stability, and determinism of the JSON reports.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_acquisition"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.as_mut().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Strips volatile timing fields so reports can be compared byte-for-byte.
fn scrub(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("elapsed_ms");
            for v in map.values_mut() {
                scrub(v);
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(scrub),
        _ => {}
    }
}

const P5: &str = "0 1\n1 2\n2 3\n3 4\n";
const J: &str = "0 1\n1 2\n2 3\n3 4\n2 5\n";

#[test]
fn solve_path5_reports_two() {
    let out = run(&["solve", "--json"], Some(P5));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["solve"]["value"], 2);
    assert_eq!(doc["results"]["bounds"]["min_maximal_matching"], 2);
    assert_eq!(doc["results"]["bounds"]["cut_lower_bound"], 2);
    assert_eq!(doc["results"]["bounds"]["degree"], 4);
    assert_eq!(doc["schema_version"], 1);
}

#[test]
fn solve_path5_golden_report() {
    // Full golden comparison on a fixed input, with volatile timing removed.
    let out = run(&["solve", "--json"], Some(P5));
    let mut doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    scrub(&mut doc);
    let expected = serde_json::json!({
        "schema_version": 1,
        "command": "solve",
        "inputs": {"n": 5, "edges": 4, "graph_hash": "5648b5436c871c64", "budget": 50_000_000u64},
        "results": {
            "solve": {
                "status": "exact",
                "value": 2,
                "best_upper_bound": null,
                "witness": {
                    "graph_hash": "5648b5436c871c64",
                    "moves": [[0, 1], [2, 1], [3, 4]],
                },
                "states_explored": 36,
            },
            "bounds": {
                "degree": 4,
                "min_maximal_matching": 2,
                "cut_lower_bound": 2,
                "cut_witness": [0, 4],
                "cut_certificates": [{"u": 0, "v": 4, "cut": [2]}],
            },
        },
    });
    assert_eq!(doc, expected);
}

#[test]
fn solve_single_vertex() {
    let out = run(&["solve", "--json"], Some("0\n"));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["solve"]["value"], 1);
}

#[test]
fn solve_petersen_via_generate() {
    let gen = run(&["generate", "petersen"], None);
    assert!(gen.status.success());
    let out = run(&["solve", "--json"], Some(&stdout(&gen)));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["solve"]["value"], 2);
}

#[test]
fn solve_exit_codes() {
    // Parse error in the input.
    let out = run(&["solve"], Some("0 x\n"));
    assert_eq!(out.status.code(), Some(2));

    // Budget too small for an exact answer.
    let out = run(&["solve", "--budget", "5"], Some(P5));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn caterpillar_reports() {
    let out = run(&["caterpillar", "--json"], Some(J));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["value"], 1);
    assert_eq!(doc["results"]["condition_holds"], true);
    assert!(doc["results"]["protocol"]["moves"].is_array());

    let p8 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n";
    let out = run(&["caterpillar", "--json"], Some(p8));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["value"], 2);
    assert_eq!(doc["results"]["condition_holds"], false);
    assert_eq!(doc["results"]["pieces"].as_array().unwrap().len(), 2);

    // A subdivided 3-star is not a caterpillar.
    let spider = "0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
    let out = run(&["caterpillar"], Some(spider));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn synthesize_diam2_on_cycle5() {
    let c5 = "0 1\n1 2\n2 3\n3 4\n0 4\n";
    let out = run(&["synthesize", "--method", "diam2", "--json"], Some(c5));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["results"]["method"], "special-c5");
    assert_eq!(doc["results"]["final_support"], 2);
    assert_eq!(doc["results"]["replay_ok"], true);
}

#[test]
fn generate_formats_are_stable() {
    let out = run(&["generate", "path", "3"], None);
    assert_eq!(stdout(&out), "0 1\n1 2\n");
    let out = run(&["generate", "path", "3", "--format", "dot"], None);
    assert_eq!(stdout(&out), "graph g {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    let out = run(&["generate", "cycle", "2"], None);
    assert_eq!(out.status.code(), Some(2));

    // Same seed, same graph.
    let a = run(&["generate", "random", "8", "--seed", "5"], None);
    let b = run(&["generate", "random", "8", "--seed", "5"], None);
    assert_eq!(stdout(&a), stdout(&b));

    let td = run(&["generate", "td", "3", "--with-protocol"], None);
    assert!(td.status.success());
    assert!(stdout(&td).contains("\"graph_hash\""));
}

#[test]
fn verify_reports_are_deterministic() {
    let args =
        ["verify", "diameter2", "--samples", "25", "--seed", "11", "--max-n", "8", "--json"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert!(a.status.success());
    let mut da: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let mut db: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    scrub(&mut da);
    scrub(&mut db);
    assert_eq!(da, db);
}

#[test]
fn verify_usage_errors() {
    // Unknown suite.
    let out = run(&["verify", "nonsense"], None);
    assert_eq!(out.status.code(), Some(2));
    // Randomized suite without a seed.
    let out = run(&["verify", "bounds"], None);
    assert_eq!(out.status.code(), Some(2));
}
