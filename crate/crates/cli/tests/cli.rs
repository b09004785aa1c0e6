//! Black-box tests of the `delannoy` binary: output shapes, the exit-code
//! contract, JSON losslessness, and bfile byte stability.

use assert_cmd::Command;
use lattice_paths::delannoy::{central_sequence, CentralAlgorithm};
use predicates::prelude::*;

fn delannoy() -> Command {
    Command::cargo_bin("delannoy").expect("binary builds")
}

/// The 10x10 array indexed [k][n], bottom row k = 0.
const PRINTED_ARRAY: [[u64; 10]; 10] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 3, 5, 7, 9, 11, 13, 15, 17, 19],
    [1, 5, 13, 25, 41, 61, 85, 113, 145, 181],
    [1, 7, 25, 63, 129, 231, 377, 575, 833, 1159],
    [1, 9, 41, 129, 321, 681, 1289, 2241, 3649, 5641],
    [1, 11, 61, 231, 681, 1683, 3653, 7183, 13073, 22363],
    [1, 13, 85, 377, 1289, 3653, 8989, 19825, 40081, 75517],
    [1, 15, 113, 575, 2241, 7183, 19825, 48639, 108545, 224143],
    [1, 17, 145, 833, 3649, 13073, 40081, 108545, 265729, 598417],
    [1, 19, 181, 1159, 5641, 22363, 75517, 224143, 598417, 1462563],
];

#[test]
fn table_text_matches_printed_array() {
    let output = delannoy().args(["table", "10", "10"]).output().unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    // k decreases down the printout
    for (row_idx, line) in lines.iter().enumerate() {
        let k = 9 - row_idx;
        let values: Vec<u64> = line
            .split_whitespace()
            .map(|tok| tok.parse().unwrap())
            .collect();
        assert_eq!(values.len(), 10, "line for k = {}", k);
        for (n, &value) in values.iter().enumerate() {
            assert_eq!(value, PRINTED_ARRAY[k][n], "entry ({}, {})", n, k);
        }
    }
    // orientation anchors: bottom row of ones, top-right 1462563
    assert!(lines[9].split_whitespace().all(|tok| tok == "1"));
    assert_eq!(lines[0].split_whitespace().last(), Some("1462563"));
}

#[test]
fn table_single_cell() {
    delannoy()
        .args(["table", "1", "1"])
        .assert()
        .success()
        .stdout("1\n");
}

#[test]
fn table_json_carries_strings() {
    let output = delannoy()
        .args(["table", "11", "11", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 121);
    let corner = entries
        .iter()
        .find(|e| e["n"] == 10 && e["k"] == 10)
        .expect("corner entry present");
    assert!(corner["value"].is_string());
    assert_eq!(corner["value"], "8097453");
}

#[test]
fn central_rec_prefix() {
    delannoy()
        .args(["central", "7", "--algorithm", "rec"])
        .assert()
        .success()
        .stdout("1 3 13 63 321 1683 8989 48639\n");
}

#[test]
fn central_zero_is_one_for_every_algorithm() {
    for algorithm in ["dp", "sum", "rec", "series", "legendre"] {
        delannoy()
            .args(["central", "0", "--algorithm", algorithm])
            .assert()
            .success()
            .stdout("1\n");
    }
}

#[test]
fn table_csv_has_explicit_keys() {
    let output = delannoy()
        .args(["table", "2", "2", "--format", "csv"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert_eq!(text, "n,k,value\n0,0,1\n1,0,1\n0,1,1\n1,1,3\n");
}

#[test]
fn central_all_agrees_to_200() {
    delannoy()
        .args(["central", "200", "--algorithm", "all"])
        .assert()
        .success()
        .stdout(predicate::str::contains("agreement: pass"));
}

#[test]
fn central_json_roundtrip_is_lossless() {
    let output = delannoy()
        .args(["central", "30", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let values = doc["values"].as_array().unwrap();
    let expected = central_sequence(30, CentralAlgorithm::GridDp);
    assert_eq!(values.len(), expected.len());
    for (value, exact) in values.iter().zip(&expected) {
        // strings, never native numbers: d_n outgrows every machine word
        assert!(value.is_string());
        assert_eq!(value.as_str().unwrap(), exact.to_string());
    }
}

#[test]
fn central_bfile_is_byte_stable() {
    let run = || {
        let output = delannoy()
            .args(["central", "10", "--format", "bfile"])
            .output()
            .unwrap();
        assert!(output.status.success());
        output.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("0 1\n1 3\n"));
    assert!(text.ends_with("10 8097453\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn schroeder_sequence() {
    delannoy()
        .args(["schroeder", "4"])
        .assert()
        .success()
        .stdout("1 2 6 22 90\n");
}

#[test]
fn walks_examples() {
    delannoy()
        .args([
            "walks", "--class", "bridge", "--jumps", "1:1,1:-1,2:0", "--length", "18",
        ])
        .assert()
        .success()
        .stdout("1462563\n");
    delannoy()
        .args([
            "walks", "--class", "walk", "--jumps", "1:1,1:-1,1:0", "--length", "2",
        ])
        .assert()
        .success()
        .stdout("9\n");
    delannoy()
        .args([
            "walks", "--class", "excursion", "--jumps", "1:1,1:-1", "--length", "6",
        ])
        .assert()
        .success()
        .stdout("5\n");
}

#[test]
fn walks_domain_errors_exit_2() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["walks", "--class", "loop", "--jumps", "1:1", "--length", "2"],
        vec!["walks", "--class", "walk", "--jumps", "1;1", "--length", "2"],
        vec!["walks", "--class", "walk", "--jumps", "0:1", "--length", "2"],
        vec![
            "walks", "--class", "excursion", "--jumps", "1:1,1:-1", "--length", "4", "--end", "2",
        ],
        vec![
            "walks", "--class", "walk", "--jumps", "1:1,1:-1", "--length", "4", "--lower", "1",
        ],
    ];
    for args in cases {
        delannoy().args(&args).assert().code(2);
    }
}

#[test]
fn ruin_deterministic_first_round() {
    let output = delannoy()
        .args(["ruin", "1", "--horizon", "5"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m prob"));
    assert_eq!(lines.next(), Some("1 1"));
    for (m, line) in (2..=5).zip(lines.by_ref().take(4)) {
        assert_eq!(line, format!("{} 0", m));
    }
    assert_eq!(lines.next(), Some("survival after 5: 0"));
    assert_eq!(lines.next(), Some("partial mean: 1"));
}

#[test]
fn ruin_all_reports_small_deviation() {
    let output = delannoy()
        .args(["ruin", "2", "--horizon", "4", "--method", "all", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["binomial_agrees"], true);
    assert!(doc["max_trig_deviation"].as_f64().unwrap() < 1e-9);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows[1]["dp"], "1/2");
    assert_eq!(rows[3]["dp"], "1/4");
}

#[test]
fn ruin_binomial_row_three() {
    let output = delannoy()
        .args(["ruin", "3", "--horizon", "9", "--method", "binomial"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.lines().any(|line| line == "3 1/4"));
}

#[test]
fn ruin_domain_errors_exit_2() {
    delannoy()
        .args(["ruin", "3", "--horizon", "2"])
        .assert()
        .code(2);
    delannoy()
        .args(["ruin", "2", "--horizon", "4", "--method", "magic"])
        .assert()
        .code(2);
    delannoy().args(["ruin", "0", "--horizon", "4"]).assert().code(2);
}

#[test]
fn ballot_and_dyck_prefix() {
    delannoy().args(["ballot", "3", "3"]).assert().success().stdout("5\n");
    delannoy().args(["ballot", "4", "2"]).assert().code(2);
    delannoy().args(["dyck-prefix", "3", "1"]).assert().success().stdout("2\n");
    delannoy().args(["dyck-prefix", "3", "2"]).assert().code(2);
}

#[test]
fn lead_values() {
    delannoy().args(["lead", "1"]).assert().success().stdout("1\n");
    delannoy().args(["lead", "2"]).assert().success().stdout("3/2\n");
    delannoy().args(["lead", "0"]).assert().code(2);
}

#[test]
fn asym_profile_shape() {
    let output = delannoy()
        .args(["asym", "10", "--profile", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let row = &doc["rows"][0];
    assert_eq!(row["n"], 10);
    assert!(row["relative_error"].as_f64().unwrap() < 1e-3);
}

#[test]
fn verify_identities_pass() {
    for identity in [
        "gf-central",
        "schroeder-algebraic",
        "bridge-decomposition",
        "p-recurrence",
        "legendre",
        "square-identity",
        "ruin-agreement",
        "ballot-oracle",
    ] {
        delannoy()
            .args(["verify", identity])
            .assert()
            .success()
            .stdout(predicate::str::contains("pass"));
    }
}

#[test]
fn verify_error_paths() {
    delannoy().args(["verify", "no-such"]).assert().code(2);
    delannoy()
        .args(["verify", "bridge-decomposition", "--order", "1"])
        .assert()
        .code(2);
}

#[test]
fn bench_digests_cross_check() {
    let digest_of = |target: &str| {
        let output = delannoy()
            .args([
                "bench", target, "--n", "2000", "--repetitions", "1", "--format", "json",
            ])
            .output()
            .unwrap();
        assert!(output.status.success());
        let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
        doc["digest"].as_str().unwrap().to_string()
    };
    assert_eq!(digest_of("central-rec"), digest_of("central-dp"));
}

#[test]
fn bench_small_n_digest() {
    for target in ["central-dp", "central-sum", "central-rec", "central-series"] {
        let output = delannoy()
            .args(["bench", target, "--n", "1", "--repetitions", "2"])
            .output()
            .unwrap();
        assert!(output.status.success());
        let text = String::from_utf8(output.stdout).unwrap();
        assert!(text.contains("value=3[1 digits]"), "{}: {}", target, text);
    }
}

#[test]
fn bench_usage_and_domain_errors() {
    delannoy()
        .args(["bench", "central-rec", "--n", "10", "--repetitions", "0"])
        .assert()
        .code(1);
    delannoy()
        .args(["bench", "warp-drive", "--n", "10"])
        .assert()
        .code(2);
}

#[test]
fn usage_errors_exit_1() {
    delannoy().args(["table", "0", "5"]).assert().code(1);
    delannoy().args(["nonsense"]).assert().code(1);
    delannoy().args(["table", "two", "2"]).assert().code(1);
    // bfile only fits sequence output
    delannoy()
        .args(["table", "3", "3", "--format", "bfile"])
        .assert()
        .code(1);
    delannoy()
        .args(["lead", "2", "--format", "bfile"])
        .assert()
        .code(1);
}

#[test]
fn help_exits_0() {
    delannoy().arg("--help").assert().success();
    delannoy().args(["central", "--help"]).assert().success();
}
