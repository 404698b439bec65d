//! End-to-end runs of the `pcat` binary.

use std::fs;
use std::process::{Command, Output};

fn pcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcat"))
        .args(args)
        .env_remove("PCAT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = pcat(&["compute", "--s", "2", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "61689134928\n");
    assert_eq!(stdout(&pcat(&["compute", "--s", "1", "--n", "1"])), "1\n");
    let o = pcat(&["compute", "--s", "2", "--n", "4", "--mode", "logspace"]);
    assert!(stdout(&o).starts_with("7.4685"), "{}", stdout(&o));
    let o = pcat(&["compute", "--s", "0", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
}

#[test]
fn table_one_round_trip() {
    let o = pcat(&["table", "--s-list", "1,2,3", "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,s,P"));
    let rows: Vec<(usize, u64, num_bigint::BigUint)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 30);
    for (n, s, p) in rows {
        assert_eq!(p, pcat::enumeration::peri_catalan(s, n as u64).unwrap());
    }
    assert!(text.contains("\n10,3,4172008467726\n"));
    assert!(text.contains("\n10,1,35967054\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(pcat(&["oracle", "--s", "3", "--n", "9"]).status.code(), Some(4));
    assert_eq!(
        pcat(&["oracle", "--s", "1", "--n", "5", "--budget", "100"]).status.code(),
        Some(4)
    );
    assert_eq!(pcat(&["compute", "--s", "1", "--n", "4000"]).status.code(), Some(2));
    assert_eq!(pcat(&["word", "--word", "(a*b"]).status.code(), Some(2));
    assert_eq!(pcat(&["quotient", "--s", "1", "--n-max", "1"]).status.code(), Some(2));
    let o = pcat(&["oracle", "--s", "1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(" match").count(), 6);
}

#[test]
fn corrupt_cache_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("pcat-s2.txt"), "pcat-cache v1 s=2\n1 2\n2 13\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_pcat"))
        .args(["compute", "--s", "2", "--n", "5"])
        .env("PCAT_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integrity"));
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = pcat(&["table", "--s-list", "2,5", "--n-max", "40"]);
    let cold = pcat(&["table", "--s-list", "2,5", "--n-max", "40", "--cache-dir", cache]);
    let warm = pcat(&["table", "--s-list", "2,5", "--n-max", "40", "--cache-dir", cache]);
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(plain.stdout, warm.stdout);
    let file = fs::read_to_string(dir.path().join("pcat-s5.txt")).unwrap();
    assert!(file.starts_with("pcat-cache v1 s=5\n1 5\n2 75\n"));
    assert_eq!(file.lines().count(), 41);
}

#[test]
fn out_file_written_only_on_success() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("q.csv");
    let t = target.to_str().unwrap();
    let o = pcat(&["quotient", "--s", "1", "--n-max", "2", "--out", t]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&target).unwrap();
    assert_eq!(
        text,
        "n,logP,logBound,quotient\n2,1.0986122886681098e0,1.0986122886681098e0,1.0000000000000000e0\n"
    );
    let failed = dir.path().join("bad.csv");
    let o = pcat(&["oracle", "--s", "3", "--n", "9", "--out", failed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!failed.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn rooted_oracle_counts() {
    let o = pcat(&["oracle", "--s", "2", "--n", "4", "--rooted", "2,2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with(",144,144,true")), "{text}");
}

#[test]
fn asymptotic_commands() {
    let o = pcat(&["regress", "--s", "12", "--n-min", "100", "--n-max", "2800", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["slope"].as_f64().unwrap() - 3.576).abs() < 0.01);
    assert!((v["intercept"].as_f64().unwrap() + 1.102).abs() < 0.05);

    let o = pcat(&["fit", "--s-min", "1", "--s-max", "12", "--proxy-n", "300", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("s,defect\n1,"));
    assert_eq!(text.lines().count(), 13);

    let o = pcat(&["quotient", "--s", "3", "--n-max", "50", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 49);
    assert!(v[48]["quotient"].as_f64().unwrap() < 1.0);
}

#[test]
fn deterministic_bytes() {
    let a = pcat(&["quotient", "--s", "6", "--n-max", "300"]);
    let b = pcat(&["quotient", "--s", "6", "--n-max", "300"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn word_class_dump() {
    let o = pcat(&["word", "--word", "((a*b)/c)", "--dump-class"]);
    assert_eq!(stdout(&o), "((a*b)/c)\n((b@a)/c)\n(c//(a*b))\n(c//(b@a))\n");
    let o = pcat(&["word", "--word", "(c//(b@a))", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basic"], "((a*b)/c)");
    assert_eq!(v["reduced"], true);
}
