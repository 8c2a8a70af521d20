//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn nichols(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_json_is_deterministic_and_exits_zero() {
    let a = nichols(&["classify", "--m", "5", "--format", "json"]);
    let b = nichols(&["classify", "--m", "5", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical inputs must give identical bytes");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["discrepancies"], 0);
    assert_eq!(v["m_range"][0], 5);
    // survivors at m = 5: two of pattern i, one ii, one v
    let survivors: Vec<&serde_json::Value> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x["outcome"] == "survivor")
        .collect();
    assert_eq!(survivors.len(), 4);
}

#[test]
fn classify_range_has_sections() {
    let out = nichols(&["classify", "--m", "3..4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("== S_3 =="));
    assert!(text.contains("== S_4 =="));
}

#[test]
fn classify_rejects_degrees_beyond_cap() {
    let out = nichols(&["classify", "--m", "13"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("NICHOLS_MAX_M"), "got: {err}");
}

#[test]
fn disabled_rule_flagged_in_header() {
    let out = nichols(&["classify", "--m", "6", "--disable-rule", "g"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# disabled rules: g"));
}

#[test]
fn disabled_trigger_rule_produces_discrepancy_exit() {
    let out = nichols(&["classify", "--m", "8", "--disable-rule", "a2"]);
    assert!(!out.status.success(), "discrepancies must flip the exit code");
    assert!(stdout(&out).contains("DISCREPANCY"));
}

#[test]
fn explain_survivor_and_infinite() {
    let out = nichols(&[
        "explain",
        "--type",
        "2,4",
        "--rho",
        "j=2:t=0;mu=eps|j=4:t=2;mu=eps",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("survivor, pattern (vii)"));

    let out = nichols(&[
        "explain",
        "--type",
        "1^2,2^3",
        "--rho",
        "j=2:t=1,1,1;mu=eps",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rule (g''')"), "got: {text}");
    assert!(text.contains("witness prop310"));
}

#[test]
fn explain_rejects_malformed_rho_with_position() {
    let out = nichols(&["explain", "--type", "2^3", "--rho", "j=2:t=1,1;mu=eps"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("expected n_j = 3"), "got: {err}");
}

#[test]
fn witness_prop33_passes() {
    let out = nichols(&["witness", "--prop", "3.3", "--k", "3", "--t", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("claim 2: all 64 table cells"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn witness_unknown_name_errors() {
    let out = nichols(&["witness", "--prop", "9.9"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown witness"));
}

#[test]
fn diagram_emits_a_four_cycle() {
    let out = nichols(&[
        "diagram",
        "--type",
        "2,5",
        "--rho",
        "j=2:t=1;mu=eps|j=5:t=1;mu=eps",
        "--family",
        "lemma31",
    ]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("graph dynkin {"));
    // the four-cycle 1-2, 1-3, 2-4, 3-4
    for edge in ["v1 -- v2", "v1 -- v3", "v2 -- v4", "v3 -- v4"] {
        assert!(dot.contains(edge), "missing {edge} in {dot}");
    }
    assert!(!dot.contains("v1 -- v4"));
}

#[test]
fn selftest_is_green() {
    let out = nichols(&["selftest"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn round_trip_of_printed_pairs() {
    // every type/irrep string printed by classify re-parses to itself
    let out = nichols(&["classify", "--m", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for verdict in v["verdicts"].as_array().unwrap() {
        let ts = verdict["type"].as_str().unwrap();
        let rs = verdict["irrep"].as_str().unwrap();
        let t = nichols_core::CycleType::parse(ts, None).unwrap();
        let rho = nichols_core::CentralizerIrrep::parse(rs, &t).unwrap();
        assert_eq!(t.to_string(), ts);
        assert_eq!(rho.format(), rs);
    }
}
