//! End-to-end tests of the `hankel` binary: exit codes, report shapes, the
//! documented example invocations, and output determinism.

use std::process::{Command, Output};

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(args)
        .env_remove("HANKEL_BETTI_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn verify_thm_1_1_on_the_line_pair_passes() {
    let out = hankel(&["verify", "--check", "thm1.1", "--g1", "L3", "--g2", "L3"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("thm1.1.ideal-equal"));
    assert!(text.contains("0 flagged, 0 fail"));
}

#[test]
fn classify_json_reports_the_non_radical_pair() {
    let out = hankel(&["classify", "--g1", "K2", "--g2", "L4", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["prime"], serde_json::Value::Bool(false));
    assert_eq!(v["radical"], serde_json::Value::Bool(false));
    assert_eq!(v["min_primes"].as_array().unwrap().len(), 2);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        for key in ["name", "status", "claimed", "computed", "paper_ref"] {
            assert!(c.get(key).is_some(), "check missing '{}': {}", key, c);
        }
        assert_ne!(c["status"], "fail", "failing check: {}", c);
    }
    assert!(v["timings_ms"].get("total").is_some());
}

#[test]
fn sweep_all_checks_exits_zero_with_flagged_rows() {
    let out = hankel(&[
        "sweep", "--max-m", "3", "--max-n", "3", "--check", "all", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("warning"), "flagged rows must warn");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["instances"].as_array().unwrap().len(), 9);
    assert_eq!(v["aborted"], serde_json::Value::Bool(false));
    assert_eq!(v["totals"]["fail"], 0);
    assert!(v["totals"]["flagged"].as_u64().unwrap() >= 1);
}

#[test]
fn empty_sweep_prints_zero_instances() {
    let out = hankel(&["sweep", "--max-m", "1", "--max-n", "3", "--check", "thm1.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 instances"));
}

#[test]
fn flagged_clique_instance_warns_but_exits_zero() {
    let out = hankel(&[
        "verify",
        "--check",
        "prop2.1",
        "--g1",
        "1-3,2-4,3-5",
        "--g2",
        "1-3,2-5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[1,4],[2,6],[3,7],[4,8]"));
    assert!(text.contains("[3,6]"));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn usage_errors_exit_two() {
    let unknown_check = hankel(&["verify", "--check", "thm9.9", "--g1", "K2", "--g2", "K2"]);
    assert_eq!(unknown_check.status.code(), Some(2));

    let bad_graph = hankel(&["gb", "--g1", "3-5,1-3", "--g2", "K2"]);
    assert_eq!(bad_graph.status.code(), Some(2));
    assert!(stderr(&bad_graph).contains("graph spec"));

    let bad_field = hankel(&["gb", "--g1", "K2", "--g2", "K2", "--field", "complex"]);
    assert_eq!(bad_field.status.code(), Some(2));

    let bad_flag = hankel(&["gb", "--g1", "K2", "--g2", "K2", "--no-such-flag"]);
    assert_eq!(bad_flag.status.code(), Some(2));
}

#[test]
fn betti_cap_respects_flag_and_env() {
    let flag = hankel(&["betti", "--g1", "K4", "--g2", "K4", "--betti-cap", "6"]);
    assert_eq!(flag.status.code(), Some(2));
    assert!(stderr(&flag).contains("cap"));

    let env = Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(["betti", "--g1", "L3", "--g2", "L3"])
        .env("HANKEL_BETTI_CAP", "4")
        .output()
        .expect("binary runs");
    assert_eq!(env.status.code(), Some(2));

    // The flag wins over the environment.
    let both = Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(["betti", "--g1", "L3", "--g2", "L3", "--betti-cap", "5"])
        .env("HANKEL_BETTI_CAP", "4")
        .output()
        .expect("binary runs");
    assert_eq!(both.status.code(), Some(0));
}

#[test]
fn betti_json_matches_the_koszul_table() {
    let out = hankel(&["betti", "--g1", "L3", "--g2", "L3", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["reg"], 3);
    assert_eq!(v["pd"], 3);
    assert_eq!(v["depth"], 2);
    let entries = v["betti"].as_array().unwrap();
    assert!(entries.contains(&serde_json::json!([1, 2, 3])));
    assert!(entries.contains(&serde_json::json!([3, 6, 1])));
}

#[test]
fn betti_text_renders_the_staircase() {
    let out = hankel(&["betti", "--g1", "L3", "--g2", "L3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("total:  1  3  3  1"), "got:\n{}", text);
    assert!(text.contains("reg = 3, pd = 3, depth = 2"));
}

#[test]
fn out_file_is_written_atomically_and_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("hankel-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");

    let to_stdout = hankel(&["betti", "--g1", "K2", "--g2", "K3", "--output", "json"]);
    let to_file = hankel(&[
        "betti", "--g1", "K2", "--g2", "K3", "--output", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(stdout(&to_file).is_empty(), "out-file runs keep stdout empty");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&to_stdout));

    // No temp file junk is left behind.
    let leftovers: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .filter(|n| n != "report.json")
        .collect();
    assert!(leftovers.is_empty(), "stray files: {:?}", leftovers);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = hankel(&["gb", "--g1", "K3", "--g2", "L3", "--output", "json"]);
    let b = hankel(&["gb", "--g1", "K3", "--g2", "L3", "--output", "json"]);
    assert_eq!(stdout(&a), stdout(&b));

    let c = hankel(&["verify", "--check", "prop2.1", "--g1", "K3", "--g2", "L3"]);
    let d = hankel(&["verify", "--check", "prop2.1", "--g1", "K3", "--g2", "L3"]);
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn prime_field_forms_parse_and_agree_with_rationals() {
    let q = hankel(&["gb", "--g1", "K2", "--g2", "K3", "--output", "json"]);
    let p1 = hankel(&[
        "gb", "--g1", "K2", "--g2", "K3", "--output", "json", "--field", "prime",
    ]);
    let p2 = hankel(&[
        "gb", "--g1", "K2", "--g2", "K3", "--output", "json", "--field", "prime:32003",
    ]);
    let p3 = hankel(&[
        "gb", "--g1", "K2", "--g2", "K3", "--output", "json", "--field", "prime(32003)",
    ]);
    for o in [&q, &p1, &p2, &p3] {
        assert_eq!(o.status.code(), Some(0));
    }
    let basis_len = |o: &Output| -> usize {
        let v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        v["basis"].as_array().unwrap().len()
    };
    assert_eq!(basis_len(&q), basis_len(&p1));
    assert_eq!(stdout(&p1), stdout(&p2));
    assert_eq!(stdout(&p2), stdout(&p3));

    let not_prime = hankel(&["gb", "--g1", "K2", "--g2", "K2", "--field", "prime:32004"]);
    assert_eq!(not_prime.status.code(), Some(2));
}

#[test]
fn gen_emits_both_generating_sets() {
    let out = hankel(&["gen", "--g1", "K2", "--g2", "K2", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["num_vars"], 3);
    assert_eq!(v["combined"]["n"], 2);
    let gens = v["pair_generators"].as_array().unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0], "x2^2 - x1*x3");
    assert_eq!(v["scroll_generators"].as_array().unwrap()[0], "x2^2 - x1*x3");
}
