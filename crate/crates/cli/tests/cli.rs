//! CLI surface tests: the binary is a thin adapter (its numbers match direct
//! library calls), output is byte-identical across repeated invocations, and
//! literals round-trip.

use std::process::Command;

use sumset_core::bounds;
use sumset_core::rho::{self, ClassFilter, RhoQuery, SearchOptions};
use sumset_core::sumset::{self, MultiplicitySet, SumsetKind};
use sumset_core::{GroupSpec, GroupSubset};

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_sumsets"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn sumset_output_matches_library() {
    let (stdout, _, code) = run(&[
        "sumset", "-g", "Z", "-A", "1,2", "-k", "signed", "-H", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let a = GroupSubset::from_i64s(&GroupSpec::Integers, &[1, 2]);
    let expect = sumset::signed_sumset(&a, 2).unwrap();
    assert_eq!(v["result"]["cardinality"], expect.len());
    assert_eq!(v["result"]["result"], expect.canonical_literal());
    assert_eq!(v["result"]["result"], "-4,-3,-2,-1,1,2,3,4");
}

#[test]
fn sumset_h_zero_is_zero_set() {
    let (stdout, _, code) = run(&[
        "sumset", "-g", "Z5", "-A", "1", "-k", "plain", "-H", "0", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["result"], "0");
    assert_eq!(v["result"]["cardinality"], 1);
}

#[test]
fn rho_output_matches_library() {
    let (stdout, _, code) = run(&[
        "rho", "-g", "Z7", "-m", "3", "-k", "signed", "-H", "2", "--filter", "sdeg=1",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let q = RhoQuery::new(
        GroupSpec::cyclic(7).unwrap(),
        3,
        MultiplicitySet::singleton(2),
        SumsetKind::Signed,
        ClassFilter::SdegEquals(1),
    );
    let r = rho::rho_search(&q, &SearchOptions::default()).unwrap();
    assert_eq!(v["result"]["value"], r.value);
    assert_eq!(v["result"]["witness"], r.witness.canonical_literal());
    assert_eq!(v["result"]["value"], 7);
}

#[test]
fn coeff_output_matches_library() {
    let (stdout, _, code) = run(&["coeff", "--h", "4", "--k", "2", "--oracle", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["value"], bounds::coeff_h4(2, 0).unwrap().to_string());
    assert_eq!(v["result"]["value"], "7440");
    assert_eq!(v["result"]["oracle_matches"], true);
}

#[test]
fn bound_inapplicable_is_reported_not_fatal() {
    // p = 8k-7 knocks out the h = 3 hypothesis
    let (stdout, _, code) = run(&[
        "bound", "--family", "signed-field", "--k", "3", "--p", "17", "--h", "3",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["value"], serde_json::Value::Null);
    assert_eq!(v["result"]["branch"], "inapplicable");
}

#[test]
fn bound_with_infinite_p() {
    let (stdout, _, code) = run(&[
        "bound", "--family", "rho-plain", "--p", "inf", "--m", "4", "--h", "2",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["value"], 7);
}

#[test]
fn construct_witness_round_trips_through_sumset() {
    let (stdout, _, code) = run(&[
        "construct", "--recipe", "rho_s_witness", "-g", "Z11", "--m", "3", "--s", "2",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let literal = v["result"]["result"].as_str().unwrap();
    let g = GroupSpec::cyclic(11).unwrap();
    let parsed = g.parse_subset(literal).unwrap();
    assert_eq!(parsed.len(), 3);
    // the witness attains min(p, 2hm-hs-h+1) at h = 2: min(11, 7) = 7
    assert_eq!(sumset::signed_sumset(&parsed, 2).unwrap().len(), 7);
}

#[test]
fn byte_identical_output_for_identical_invocations() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["sumset", "-g", "Z17", "-A", "1,2,3,4,5", "-k", "restricted-signed", "-H", "2"],
        vec!["rho", "-g", "Z11", "-m", "4", "-k", "signed", "-H", "3", "--format", "json"],
        vec!["coeff", "--h", "3", "--k", "4", "--oracle", "--format", "csv"],
        vec!["bound", "--family", "restricted-field", "--k", "9", "--p", "41", "--h", "3", "--s", "1"],
        vec!["construct", "--recipe", "odd_spaced_ap", "--d", "2", "--m", "5", "--format", "csv"],
        vec!["list-checks", "--format", "csv"],
    ];
    for args in cases {
        let (a, _, code_a) = run(&args);
        let (b, _, code_b) = run(&args);
        assert_eq!(code_a, 0, "{args:?}");
        assert_eq!(code_a, code_b);
        assert_eq!(a, b, "output differs across runs for {args:?}");
        assert!(!a.is_empty());
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let base = [
        "rho", "-g", "Z11", "-m", "4", "-k", "signed", "-H", "3", "--format", "json",
    ];
    let (one, _, _) = run(&base);
    let mut with_workers = base.to_vec();
    with_workers.extend(["--workers", "4"]);
    let (four, _, _) = run(&with_workers);
    assert_eq!(one, four);
}

#[test]
fn parse_errors_exit_2_with_position() {
    let (_, stderr, code) = run(&["sumset", "-g", "Q17", "-A", "1", "-H", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("Q17"), "stderr was: {stderr}");

    let (_, stderr, code) = run(&["sumset", "-g", "Z2xZ3", "-A", "(1,2),(0", "-H", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("parse error"), "stderr was: {stderr}");
}

#[test]
fn envelope_violations_fail_fast_with_estimate() {
    let (_, stderr, code) = run(&["rho", "-g", "Z40", "-m", "12", "-H", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("max-m"), "stderr was: {stderr}");

    let (_, stderr, code) = run(&["sumset", "-g", "Z100", "-A", "1", "-H", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("envelope"), "stderr was: {stderr}");
}

#[test]
fn verify_single_check_passes_and_exits_zero() {
    let (stdout, _, code) = run(&["verify", "--check", "EX_Z41", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["reports"][0]["id"], "EX_Z41");
    assert_eq!(v["reports"][0]["cells"], 1);
    assert_eq!(v["reports"][0]["failures"].as_array().unwrap().len(), 0);
    assert!(v["reports"][0]["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_passes_end_to_end() {
    let (stdout, _, code) = run(&["verify", "--check", "all", "--workers", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[1], "id,passed,cells,failures,elapsed_ms");
    // 32 catalog rows, all passing with zero failures
    assert_eq!(lines.len(), 2 + 32);
    for row in &lines[2..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[1], "true", "row: {row}");
        assert_eq!(cols[3], "0", "row: {row}");
    }
}

#[test]
fn verify_unknown_check_exits_2() {
    let (_, stderr, code) = run(&["verify", "--check", "NOT_A_CHECK"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown check"), "stderr was: {stderr}");
}

#[test]
fn verify_grid_override_changes_cells() {
    let (stdout, _, _) = run(&[
        "verify", "--check", "T_FIELD_H3", "--grid", "primes=13", "--grid", "size_min=3",
        "--grid", "size_max=3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["reports"][0]["cells"], 160);
}

#[test]
fn list_checks_covers_catalog() {
    let (stdout, _, code) = run(&["list-checks", "--format", "csv"]);
    assert_eq!(code, 0);
    for id in ["T_DEVOS", "L_SIGNED_EQ_UNION", "T_RSS_FIELD", "EX_Z41", "T_SYM_RESTRICT"] {
        assert!(stdout.contains(id), "missing {id}");
    }
    // config header comment plus csv header plus 32 checks
    assert_eq!(stdout.lines().count(), 2 + 32);
}

#[test]
fn sweep_runs_a_mixed_query_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    std::fs::write(
        &path,
        r#"{
  "queries": [
    {"cmd": "sumset", "group": "Z17", "set": "1,2,3,4,5", "kind": "restricted-signed", "multiplicity": "2"},
    {"cmd": "rho", "group": "Z7", "m": 3, "kind": "signed", "multiplicity": "2", "filter": "sdeg=1"},
    {"cmd": "coeff", "h": 4, "k": 2},
    {"cmd": "bound", "family": "restricted-field", "k": 9, "p": "41", "h": 3, "s": 1},
    {"cmd": "construct", "recipe": "odd_spaced_ap", "d": 2, "m": 5}
  ]
}"#,
    )
    .unwrap();
    let path_s = path.to_str().unwrap();
    let (stdout, stderr, code) = run(&["sweep", "--config", path_s, "--format", "csv"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let lines: Vec<&str> = stdout.lines().collect();
    assert!(lines[0].starts_with('#'));
    assert_eq!(lines[1], "cmd,spec,value,witness");
    assert_eq!(lines.len(), 2 + 5);
    assert!(lines[2].starts_with("sumset,") && lines[2].contains(",16,"));
    assert!(lines[3].starts_with("rho,") && lines[3].contains(",7,"));
    assert!(lines[4].starts_with("coeff,") && lines[4].contains(",7440,"));
    assert!(lines[5].starts_with("bound,") && lines[5].contains(",40,"));
    assert!(lines[6].starts_with("construct,") && lines[6].contains("\"2,6,10,14,18\""));
    // witness sets are quoted canonical literals that parse back
    let witness = lines[6].rsplit('"').nth(1).unwrap();
    let parsed = GroupSpec::Integers.parse_subset(witness).unwrap();
    assert_eq!(parsed.len(), 5);

    // identical invocation, identical bytes
    let (again, _, _) = run(&["sweep", "--config", path_s, "--format", "csv"]);
    assert_eq!(stdout, again);
}

#[test]
fn env_var_sets_default_workers() {
    let out = Command::new(env!("CARGO_BIN_EXE_sumsets"))
        .env("SUMSETS_WORKERS", "4")
        .args(["rho", "-g", "Z11", "-m", "4", "-H", "3", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let q = RhoQuery::new(
        GroupSpec::cyclic(11).unwrap(),
        4,
        MultiplicitySet::singleton(3),
        SumsetKind::Signed,
        ClassFilter::All,
    );
    let expect = rho::rho_search(&q, &SearchOptions::default()).unwrap();
    assert_eq!(v["result"]["value"], expect.value);
    assert_eq!(v["result"]["witness"], expect.witness.canonical_literal());
}
