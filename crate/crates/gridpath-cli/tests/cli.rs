//! End-to-end CLI behavior: exit codes, machine-readable failure reasons,
//! determinism and check round trips.

use std::process::{Command, Output};

fn gridpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridpath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cycle_found_and_valid() {
    let out = gridpath(&["cycle", "4", "5", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with(r#"{"kind":"cycle""#));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 14);
}

#[test]
fn parity_failure_is_machine_readable() {
    let out = gridpath(&["path", "2", "2", "1", "1", "2", "2", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["error"], "parity");
    assert_eq!(parsed["l"], 3);
    assert_eq!(parsed["L"], 3);
}

#[test]
fn dimension_failure() {
    let out = gridpath(&["cycle", "1", "5", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["error"], "dimensions");
}

#[test]
fn range_failure() {
    let out = gridpath(&["cycle", "5", "3", "16"]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["error"], "range");
}

#[test]
fn usage_error_is_exit_2() {
    let out = gridpath(&["cycle", "4", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gridpath(&["cycle", "4", "5", "not-a-number"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["cycle", "9", "9", "36"],
        vec!["path", "7", "7", "2", "2", "6", "5", "22"],
        vec!["cycle", "6", "6", "20", "--format", "svg"],
        vec!["cycle", "6", "6", "20", "--format", "ascii"],
    ] {
        let a = gridpath(&args);
        let b = gridpath(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn check_round_trip() {
    let dir = std::env::temp_dir().join(format!("gridpath-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let out = gridpath(&["cycle", "4", "4", "12"]);
    let file = dir.join("cycle.json");
    std::fs::write(&file, stdout(&out)).unwrap();
    let check = gridpath(&["check", file.to_str().unwrap(), "--grid", "4", "4"]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
    assert!(stdout(&check).contains(r#""valid":true"#));

    // corrupt: duplicate a vertex
    let text = std::fs::read_to_string(&file).unwrap();
    let corrupted = text.replace("[[1,1],", "[[1,1],[1,1],");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, corrupted).unwrap();
    let check = gridpath(&["check", bad.to_str().unwrap(), "--grid", "4", "4"]);
    assert_eq!(check.status.code(), Some(1));
    assert!(stdout(&check).contains(r#""valid":false"#));

    // out-of-grid under smaller dims
    let check = gridpath(&["check", file.to_str().unwrap(), "--grid", "3", "3"]);
    assert_eq!(check.status.code(), Some(1));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn three_d_round_trip() {
    let dir = std::env::temp_dir().join(format!("gridpath-cli-3d-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = gridpath(&["path3d", "2", "2", "2", "1", "1", "1", "2", "2", "2", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let file = dir.join("p3.json");
    std::fs::write(&file, stdout(&out)).unwrap();
    let check = gridpath(&["check", file.to_str().unwrap(), "--grid3d", "2", "2", "2"]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cycle3d_and_failure() {
    let out = gridpath(&["cycle3d", "2", "2", "2", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gridpath(&["cycle3d", "1", "1", "5", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_zero_reps_is_empty_table() {
    let out = gridpath(&["bench", "cycles", "--repetitions", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "k,median_ns,min_ns,max_ns\n");
}

#[test]
fn bench_emits_csv_and_exponent() {
    let out = gridpath(&["bench", "cycles", "--sizes", "1000,4000", "--repetitions", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("k,median_ns"));
    assert!(text.contains("# fitted log-log exponent"));
}

#[test]
fn oracle_subcommands() {
    let out = gridpath(&["oracle", "cycle-exists", "3", "3", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "true");
    let out = gridpath(&["oracle", "cycle-exists", "3", "3", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = gridpath(&["oracle", "path-exists", "2", "2", "1", "1", "2", "2", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gridpath(&["oracle", "longest-path", "3", "3", "1", "1", "2", "1"]);
    assert_eq!(stdout(&out).trim(), "8");
}

#[test]
fn oracle_bound_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_gridpath"))
        .args(["oracle", "cycle-exists", "5", "5", "8"])
        .env("GRIDKPATH_ORACLE_BOUND", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
