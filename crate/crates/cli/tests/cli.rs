//! End-to-end checks of the binary: exit codes, JSON output round-trips, and
//! the documented command surface.

use std::process::{Command, Output};

fn ctxgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctxgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn analyze_text_output_and_exit_zero() {
    let out = ctxgraph(&["analyze", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("alpha (independence number): 2"));
    assert!(text.contains("QCG"));
    assert!(text.contains("smallest odd hole: [1, 2, 3, 4, 5]"));
    assert!(text.contains("quantum dimension lower bound: 3"));
}

#[test]
fn analyze_json_round_trips() {
    let out = ctxgraph(&["analyze", "anticycle:9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["alpha"], 2);
    assert_eq!(parsed["dimension"]["bound"], 6);
    assert_eq!(parsed["classification"]["verdict"], "QCG");
    // Bit-stable re-serialization.
    let reserialized = serde_json::to_string(&parsed).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(parsed, reparsed);
}

#[test]
fn parse_errors_exit_one() {
    let out = ctxgraph(&["analyze", "dodecahedron:12"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ctxgraph(&["analyze", "cycle:2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ctxgraph(&["orthorep", "cycle", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn resource_caps_exit_two() {
    let out = ctxgraph(&[
        "analyze",
        "product(cycle:5, cycle:5)",
        "--max-vertices",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Core stages capped: theta SDP refuses 65+ vertices, so classification
    // is incomplete and the exit code is 2 even with --partial.
    let out = ctxgraph(&["analyze", "power(cycle:5, 3)", "--partial"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout_str(&out);
    assert!(text.contains("skipped stages"));
}

#[test]
fn census_matches_known_row() {
    let out = ctxgraph(&["census", "circulant:8:1,4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["counts"]["C5"], 8);
    assert_eq!(parsed["counts"]["C7"], 0);
    let out = ctxgraph(&["census", "cycle:9", "--targets", "C5,C7"]);
    let text = stdout_str(&out);
    assert!(text.contains("cycle:9"));
    let out = ctxgraph(&["census", "complete:5", "--targets", "C5", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["counts"]["C5"], 0);
}

#[test]
fn table1_json_has_four_rows() {
    let out = ctxgraph(&["table1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["counts"]["C5"], 1);
    assert_eq!(rows[1]["counts"]["C5"], 8);
    assert_eq!(rows[2]["counts"]["C5"], 12);
    assert_eq!(rows[3]["counts"]["C5"], 96);
    for row in rows {
        for target in ["C7", "C7bar", "C9", "C9bar"] {
            assert_eq!(row["counts"][target], 0, "{} {target}", row["graph"]);
        }
    }
}

#[test]
fn orthorep_json_schema() {
    let out = ctxgraph(&["orthorep", "anticycle", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["dimension"], 5);
    assert_eq!(parsed["vectors"].as_array().unwrap().len(), 7);
    assert_eq!(parsed["handle"].as_array().unwrap().len(), 5);
    assert_eq!(parsed["verification"]["pass"], true);
    let hv = parsed["handle_value"].as_f64().unwrap();
    assert!((hv - 2.10992).abs() < 1e-4);
}

#[test]
fn inequality_families() {
    let out = ctxgraph(&["inequality", "chsh", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["events"].as_array().unwrap().len(), 8);
    assert_eq!(parsed["nchv_bound"], 3);
    let q = parsed["quantum_bound"].as_f64().unwrap();
    assert!((q - 3.41421).abs() < 1e-3);

    let out = ctxgraph(&["inequality", "s-cycle", "7", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["nchv_bound"], 3);
    let q = parsed["quantum_bound"].as_f64().unwrap();
    assert!((q - 3.31767).abs() < 1e-4);

    let out = ctxgraph(&["inequality", "s-anticycle", "7"]);
    let text = stdout_str(&out);
    assert!(text.contains("noncontextual (NCHV) bound: 2"));
    assert!(text.contains("quantum bound: 2.10992"));

    // Missing n is an input error.
    let out = ctxgraph(&["inequality", "s-cycle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eprinciple_chain_values() {
    let out = ctxgraph(&["eprinciple", "anticycle:7", "--max-m", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["nchv"], 2);
    let entries = parsed["e"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["p"], "7/3");
    assert_eq!(entries[1]["p"], "49/10");
    assert!((entries[0]["value"].as_f64().unwrap() - 2.3333).abs() < 5e-4);
    assert!((entries[1]["value"].as_f64().unwrap() - 2.2136).abs() < 5e-4);

    let out = ctxgraph(&["eprinciple", "complete:3", "--max-m", "2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    for e in parsed["e"].as_array().unwrap() {
        assert_eq!(e["p"], "1");
        assert!((e["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn catalog_lists_grammar() {
    let out = ctxgraph(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    for needle in ["cycle:N", "shrikhande", "product(SPEC, SPEC)", "file:PATH", "KCBS"] {
        assert!(text.contains(needle), "catalog lacks {needle}");
    }
}

#[test]
fn env_variable_sets_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_ctxgraph"))
        .args(["analyze", "complete:4"])
        .env("CTXGRAPH_FORMAT", "json")
        .output()
        .expect("binary runs");
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["alpha"], 1);
    assert_eq!(parsed["classification"]["verdict"], "QNCG");
}
