//! Black-box tests of the `apery` binary: exit codes, output anchors,
//! report shape, and byte-identity across worker counts.

use std::fs;
use std::process::{Command, Output};

fn apery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .env_remove("APERY_JOBS")
        .output()
        .expect("spawn apery")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn seq_prints_exact_values() {
    let out = apery(&["seq", "--id", "W", "--n", "0:3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1, -3, 9, -21\n");

    let out = apery(&["seq", "--id", "A", "--n", "0:1"]);
    assert_eq!(stdout(&out), "1, 5\n");

    let out = apery(&["seq", "--id", "W", "--n", "0:0"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn seq_rejects_bad_input() {
    let out = apery(&["seq", "--id", "Z", "--n", "0:3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&["seq", "--id", "W", "--n", "5:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rep_prints_normalized_representations() {
    let out = apery(&["rep", "--p", "13", "--form", "1:1:1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(x, y) = (3, 2)"), "{}", stdout(&out));

    let out = apery(&["rep", "--p", "7", "--form", "4:1:27"]);
    assert!(stdout(&out).contains("(x, y) = (1, 1)"), "{}", stdout(&out));

    // 11 = 3 mod 4 is not a sum of two squares
    let out = apery(&["rep", "--p", "11", "--form", "1:1:1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no representation"), "{}", stdout(&out));
}

#[test]
fn rep_rejects_bad_input() {
    let out = apery(&["rep", "--p", "8", "--form", "1:1:1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&["rep", "--p", "13", "--form", "9:9:9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_is_stable_and_covers_registry() {
    let a = apery(&["list"]);
    let b = apery(&["list"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().count() >= 40);
    assert!(text.contains("thm-2.1-a"));
    assert!(text.contains("conj-4.26-1"));
}

#[test]
fn verify_exit_codes() {
    let out = apery(&["verify", "--claims", "thm-2.2", "--primes", "5:100"]);
    assert_eq!(out.status.code(), Some(0));

    let out = apery(&["verify", "--claims", "nosuch", "--primes", "5:100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("selector"));

    let out = apery(&["verify", "--claims", "thm-2.2", "--primes", "9:3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = apery(&["verify", "--claims", "thm-2.2", "--primes", "5:50", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = dir.path().join("r1.jsonl");
    let f8 = dir.path().join("r8.jsonl");
    let fenv = dir.path().join("renv.jsonl");
    let base = ["verify", "--claims", "conj-4.3,thm-2.2,conj-4.26", "--primes", "3:120"];

    let mut args: Vec<&str> = base.to_vec();
    args.extend(["--jobs", "1", "--output", f1.to_str().unwrap()]);
    assert!(apery(&args).status.success());

    let mut args: Vec<&str> = base.to_vec();
    args.extend(["--jobs", "8", "--output", f8.to_str().unwrap()]);
    assert!(apery(&args).status.success());

    // jobs default comes from APERY_JOBS when the flag is absent
    let mut args: Vec<&str> = base.to_vec();
    args.extend(["--output", fenv.to_str().unwrap()]);
    let out = Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(&args)
        .env("APERY_JOBS", "5")
        .output()
        .unwrap();
    assert!(out.status.success());

    let b1 = fs::read(&f1).unwrap();
    assert_eq!(b1, fs::read(&f8).unwrap());
    assert_eq!(b1, fs::read(&fenv).unwrap());
}

#[test]
fn jsonl_report_shape_and_heavy_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heavy.jsonl");
    let out = apery(&[
        "verify", "--claims", "conj-4.5", "--primes", "5:100", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let (rows, last) = lines.split_at(lines.len() - 1);
    for line in rows {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["claim", "p", "status", "lhs", "rhs", "witness", "ms"] {
            assert!(v.get(key).is_some(), "missing {} in {}", key, line);
        }
        // the default heavy bound keeps p^2-window claims at p <= 31
        assert!(v["p"].as_u64().unwrap() <= 31, "{}", line);
    }
    let summary: serde_json::Value = serde_json::from_str(last[0]).unwrap();
    let body = &summary["summary"];
    assert_eq!(body["total"].as_u64().unwrap(), rows.len() as u64);
    assert_eq!(body["lo"].as_u64(), Some(5));
    assert_eq!(body["hi"].as_u64(), Some(100));
    assert_eq!(body["failed"].as_u64(), Some(0));
    // primes 5..=31: 5 7 11 13 17 19 23 29 31
    assert_eq!(rows.len(), 9);
}

#[test]
fn csv_report_has_rows_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = apery(&[
        "verify", "--claims", "thm-2.2", "--primes", "3:40", "--format", "csv",
        "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,p,status,lhs,rhs,witness,ms"));
    // primes 3..=40: 3 5 7 11 13 17 19 23 29 31 37
    assert_eq!(lines.count(), 11);
    assert!(!text.contains("summary"));
}

#[test]
fn verify_without_output_streams_report_to_stdout() {
    let out = apery(&["verify", "--claims", "thm-2.2", "--primes", "3:20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with('{'), "{}", text);
    assert!(text.lines().last().unwrap().contains("\"summary\""));
    // the human summary moves to stderr so stdout stays machine-readable
    assert!(String::from_utf8_lossy(&out.stderr).contains("verified:"));
}

#[test]
fn failed_runs_leave_no_file_behind() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.jsonl");
    let out = apery(&[
        "verify", "--claims", "nosuch", "--primes", "3:20", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());

    // a successful write leaves exactly the report, no temp residue
    let out = apery(&[
        "verify", "--claims", "thm-2.2", "--primes", "3:20", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    assert!(path.exists());
}
