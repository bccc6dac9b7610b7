//! End-to-end CLI checks: exit-code contract, file round trips, kv output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn planelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("planelab-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn check_holds_exits_zero() {
    let out = planelab(&[
        "check",
        "--plane",
        "pg2",
        "--statement",
        "D",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("holds"));
}

#[test]
fn counterexample_found_exits_one() {
    let out = planelab(&[
        "counterexample",
        "--plane",
        "moulton",
        "--statement",
        "sPP",
        "--seed",
        "1",
        "--budget",
        "1000000",
        "--format",
        "kv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), include_str!("fixtures/moulton_spp.kv"));
}

#[test]
fn counterexample_absent_exits_zero() {
    let out = planelab(&[
        "counterexample",
        "--plane",
        "pg4",
        "--statement",
        "D",
        "--seed",
        "1",
        "--budget",
        "1000000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no counterexample"));
}

#[test]
fn usage_errors_exit_two() {
    // Exhaustive mode on the generative plane.
    let out = planelab(&[
        "check",
        "--plane",
        "moulton",
        "--statement",
        "D",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("exhaustive mode requires a finite plane"));

    // Unknown plane and unknown statement.
    let out = planelab(&["check", "--plane", "pg6", "--statement", "D"]);
    assert_eq!(out.status.code(), Some(2));
    let out = planelab(&["check", "--plane", "pg3", "--statement", "XX"]);
    assert_eq!(out.status.code(), Some(2));

    // Bad flags (clap).
    let out = planelab(&["check", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_reports_all_twelve() {
    let out = planelab(&["scan", "--plane", "pg2", "--mode", "exhaustive", "--format", "kv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for tag in ["D", "HD", "LD", "wLD", "cwLD", "wD", "cD", "P", "PB", "pP", "sPP", "LP"] {
        assert!(
            text.contains(&format!("statement={tag}\n")),
            "missing {tag} in scan output"
        );
    }
    assert_eq!(text.matches("verdict=holds").count(), 12);
}

#[test]
fn export_dualize_validate_round_trip() {
    let exported = temp_path("pg3.txt");
    let dualized = temp_path("pg3-dual.txt");
    let out = planelab(&["export", "--plane", "pg3", "--out", exported.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = planelab(&[
        "plane",
        "validate",
        "--in",
        exported.to_str().unwrap(),
        "--format",
        "kv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pi1=true"));

    let out = planelab(&[
        "dualize",
        "--in",
        exported.to_str().unwrap(),
        "--out",
        dualized.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // Double dual returns the original text bit-exactly.
    let again = temp_path("pg3-double-dual.txt");
    let out = planelab(&[
        "dualize",
        "--in",
        dualized.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let original = std::fs::read_to_string(&exported).unwrap();
    let doubled = std::fs::read_to_string(&again).unwrap();
    assert_eq!(original, doubled);
    for p in [exported, dualized, again] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn validate_flags_broken_matrix_with_exit_one() {
    let path = temp_path("broken.txt");
    // Two lines through the same two points.
    std::fs::write(&path, "points=4 lines=3\n110\n110\n001\n001\n").unwrap();
    let out = planelab(&["plane", "validate", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let _ = std::fs::remove_file(path);
}

#[test]
fn malformed_matrix_exits_two() {
    let path = temp_path("malformed.txt");
    std::fs::write(&path, "points=2 lines=3\n101\n10\n").unwrap();
    let out = planelab(&["plane", "validate", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn chain_command_matches_pinned_output() {
    let out = planelab(&[
        "chain",
        "--triangle",
        "0,0;2,0;0,2",
        "--target",
        "-5,-5",
        "--format",
        "kv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("fixtures/chain.kv"));

    let out = planelab(&["chain", "--triangle", "0,0;1,1;2,2", "--target", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn implications_over_small_library_exits_zero() {
    let out = planelab(&[
        "implications",
        "--planes",
        "pg2,pg3,moulton",
        "--budget",
        "256",
        "--format",
        "kv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("violations=0"));
    assert!(text.contains("vector.pg2.D=holds (exhaustive)"));
    assert!(text.contains("vector.moulton.D=fails (sampled)"));
}

#[test]
fn plane_build_summaries() {
    let out = planelab(&["plane", "build", "pg", "--q", "5", "--format", "kv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("points=31"));
    assert!(text.contains("points_per_line=6"));

    let out = planelab(&["plane", "build", "moulton", "--format", "kv"]);
    assert!(stdout(&out).contains("points=infinite"));

    let out = planelab(&["plane", "build", "pg", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));

    let out = planelab(&["plane", "build", "hall9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("91 points"));
}
