//! Exit-code contract of the binary: 0 success, 1 usage/runtime error,
//! 2 when a check subcommand ran but a tolerance failed.

use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphdiffuse"))
}

#[test]
fn usage_errors_exit_one() {
    let out = bin().arg("bogus-subcommand").output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().args(["eigvals", "--config", "/nonexistent.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let dir = std::env::temp_dir().join("graphdiffuse-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad-geometry.json");
    fs::write(&bad, r#"{"geometry":"3d"}"#).unwrap();
    let out = bin()
        .args(["absorbers", "--config", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn failed_tolerance_exits_two() {
    let dir = std::env::temp_dir().join("graphdiffuse-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let strict = dir.join("strict.json");
    fs::write(&strict, r#"{"tolerance":1e-30}"#).unwrap();
    let out = bin()
        .args(["permutohedron", "--config", strict.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = bin().arg(flag).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{flag}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("graphdiffuse-cli-test");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cutoff.csv");
    let out = bin()
        .args(["cutoff", "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# tool=graphdiffuse"));
    assert!(text.contains("method,eta_max_cutoff"));
}
