//! Drives the compiled binary and checks exit codes and output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a051221"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("a051221-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_defaults() {
    let out = bin(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("fallback pairs (5): (22,8) (38,16) (68,24) (67,24) (3,12)"), "{text}");
    assert!(text.contains("cross-check passed"));
}

#[test]
fn verify_single_prime_is_inconclusive() {
    let out = bin(&["verify", "--primes", "160001"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("inconclusive pairs (5): (22,8) (38,16) (68,24) (67,24) (3,12)"), "{err}");
}

#[test]
fn verify_small_range() {
    assert_eq!(bin(&["verify", "--max", "50", "--quiet"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "--min", "100", "--max", "200"]).status.code(), Some(0));
}

#[test]
fn invalid_configurations_exit_3() {
    for args in [
        vec!["verify", "--modulus", "12"],
        vec!["verify", "--primes", "160001,10"],
        vec!["verify", "--primes", "9"],
        vec!["verify", "--x-max", "40"],
        vec!["verify", "--oracle-x-max", "38"],
        vec!["verify", "--min", "10", "--max", "5"],
        vec!["verify", "--jobs", "0"],
        vec!["verify", "--max", "-4"],
        vec!["verify", "--bogus"],
        vec!["example", "--c", "39"],
        vec!["example", "--c", "2500"],
        vec!["oracle-check", "--c", "1", "--x-max", "38"],
        vec!["known", "--x-max", "99"],
    ] {
        assert_eq!(bin(&args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn example_matches_golden_trace() {
    let out = bin(&["example", "--c", "31"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/example_c31.txt");
    assert_eq!(stdout(&out), golden);
    // byte-stable across runs
    assert_eq!(stdout(&bin(&["example", "--c", "31"])), golden);
}

#[test]
fn example_vacuous() {
    let out = bin(&["example", "--c", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("vacuous: no fundamental pairs"));
}

#[test]
fn example_fallback_shows_both_primes() {
    let out = bin(&["example", "--c", "156"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pair (a, b) = (22, 8)"));
    assert!(text.contains("excluded by p = 1601"));
    let out = bin(&["example", "--c", "156", "--primes", "160001"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn known_list() {
    let out = bin(&["known"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "0 0");
    assert!(lines.last().unwrap().ends_with(" 1999"));

    let path = tmp("known.txt");
    let out = bin(&["known", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn oracle_check_lines() {
    let out = bin(&["oracle-check", "--c", "31", "--x-max", "37"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no representation"));
    let out = bin(&["oracle-check", "--c", "39", "--x-max", "7"]);
    assert_eq!(stdout(&out).trim(), "39: witness x=3 y=31");
    let out = bin(&["oracle-check", "--min", "0", "--max", "10", "--x-max", "3"]);
    assert_eq!(stdout(&out).lines().count(), 11);
}

#[test]
fn certificate_document() {
    let path = tmp("cert.json");
    let out = bin(&["verify", "--quiet", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["known_set_size"], 59);
    assert_eq!(doc["complete"], true);
    assert_eq!(doc["config"]["primes"], serde_json::json!([160001, 1601]));
    let candidates = doc["candidates"].as_array().unwrap();
    let c31 = candidates.iter().find(|c| c["c"] == 31).unwrap();
    let pair = &c31["pairs"][0];
    assert_eq!((pair["a"].as_u64(), pair["b"].as_u64()), (Some(3), Some(2)));
    assert_eq!(pair["zero_positions_sample"], serde_json::json!({"offset": 3309, "modulus": 5000}));
    assert_eq!(pair["subgroup_order"], 1250);
    let fallback: Vec<(u64, u64)> = doc["fallback_pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["a"].as_u64().unwrap(), p["b"].as_u64().unwrap()))
        .collect();
    assert_eq!(fallback, vec![(22, 8), (38, 16), (68, 24), (67, 24), (3, 12)]);
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = a051221::cli::run(["a051221", "example", "--c", "31"], &mut out, &mut err);
    assert_eq!(status.code(), 0);
    assert_eq!(String::from_utf8(out).unwrap(), include_str!("golden/example_c31.txt"));
}
