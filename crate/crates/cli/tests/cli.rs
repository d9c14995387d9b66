//! End-to-end checks of the command-line interface.

use std::process::Command;

fn webcalc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_webcalc"))
}

#[test]
fn dim_example() {
    let out = webcalc()
        .args(["dim", "--n", "2", "--levi", "1,1", "--m", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6");
}

#[test]
fn circle_example() {
    let out = webcalc()
        .args(["circle", "--n", "3", "--levi", "3", "--k", "1", "--side", "left"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["agree"], true);
    // v^{-3} [3] u_1
    assert_eq!(json["computed"], "v^-5*u1 + v^-3*u1 + v^-1*u1");
}

#[test]
fn eval_digon() {
    let dir = std::env::temp_dir().join("webcalc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("digon.web");
    std::fs::write(&file, "split(1,1) ; merge(1,1)\n").unwrap();
    let out = webcalc()
        .args(["eval", "--file", file.to_str().unwrap(), "--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["entries"][0][2], "v^-1 + v");
    // identical invocations give identical bytes
    let again = webcalc()
        .args(["eval", "--file", file.to_str().unwrap(), "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn eval_typecheck_failure_is_usage_error() {
    let dir = std::env::temp_dir().join("webcalc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.web");
    std::fs::write(&file, "merge(1,1) ; capR(1)\n").unwrap();
    let out = webcalc()
        .args(["eval", "--file", file.to_str().unwrap(), "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("shape mismatch"), "stderr: {err}");
}

#[test]
fn syntax_error_carries_location() {
    let dir = std::env::temp_dir().join("webcalc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("syntax.web");
    std::fs::write(&file, "merge(1,)\n").unwrap();
    let out = webcalc()
        .args(["eval", "--file", file.to_str().unwrap(), "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "stderr: {err}");
}

#[test]
fn check_monoidality_emits_json_lines() {
    let out = webcalc()
        .args(["check", "--suite", "monoidality"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    for line in stdout.lines() {
        let json: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(json["suite"], "monoidality");
        assert_eq!(json["status"], "pass");
        assert!(json["elapsed_ms"].is_number());
    }
    assert!(stdout.lines().count() >= 3);
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = webcalc()
        .args(["check", "--suite", "frobnicate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ak_report_fields() {
    let out = webcalc()
        .args(["ak", "--n", "2", "--levi", "1,1", "--m", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["blob_dimension"], 6);
    assert_eq!(json["image_rank"], 6);
    assert_eq!(json["relations_ok"], true);
    assert_eq!(json["jm_minpoly_ok"], true);
    assert_eq!(json["r2_kernel_ok"], true);
}

#[test]
fn config_file_defaults_and_flag_override() {
    let dir = std::env::temp_dir().join("webcalc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("webcalc.conf");
    std::fs::write(&cfg, "n=2\nlevi=1,1\nseed=5\n").unwrap();
    let out = webcalc()
        .args(["dim", "--config", cfg.to_str().unwrap(), "--m", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
    // flag overrides the config
    let out = webcalc()
        .args(["dim", "--config", cfg.to_str().unwrap(), "--n", "3", "--levi", "1,1,1", "--m", "1"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
}

#[test]
fn seed_env_var_is_accepted() {
    let out = webcalc()
        .env("WEBCALC_SEED", "12345")
        .args(["ak", "--n", "2", "--levi", "1,1", "--m", "1", "--check", "dimension"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["blob_dimension"], json["image_rank"]);
}

#[test]
fn tensor_flag_switches_products() {
    let dir = std::env::temp_dir().join("webcalc_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("witness.web");
    std::fs::write(&file, "(coil([1])) @ (id([1]))\n").unwrap();
    let skein = webcalc()
        .args(["eval", "--file", file.to_str().unwrap(), "--n", "2", "--levi", "1,1"])
        .output()
        .unwrap();
    let hopf = webcalc()
        .args([
            "eval", "--file", file.to_str().unwrap(), "--n", "2", "--levi", "1,1",
            "--tensor", "hopf",
        ])
        .output()
        .unwrap();
    assert!(skein.status.success() && hopf.status.success());
    assert_ne!(skein.stdout, hopf.stdout);
}
