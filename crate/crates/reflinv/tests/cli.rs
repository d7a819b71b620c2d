//! Black-box tests of the command-line driver: exit codes, report schema,
//! and config-file precedence.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reflinv"))
}

#[test]
fn passing_scenario_exits_zero_with_contract_schema() {
    let out = bin()
        .args(["--scenario", "s4-l4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = v["scenarios"].as_array().unwrap();
    assert_eq!(arr.len(), 1);
    let obj = arr[0].as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["flags", "ms", "name", "paper_ref", "status", "witness"]);
    assert_eq!(obj["status"], "PASS");
    assert_eq!(obj["name"], "s4-l4");
}

#[test]
fn unknown_scenario_exits_two() {
    let out = bin().args(["--scenario", "no-such"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown scenario"));
}

#[test]
fn empty_selection_exits_two() {
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn breached_resource_cap_exits_two() {
    let out = bin()
        .args(["--scenario", "g12-reproduction", "--max-order", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = std::env::temp_dir();
    let path = dir.join("reflinv_cli_test_cfg.json");
    std::fs::write(
        &path,
        r#"{"scenario": ["craig-lemma-2.3"], "format": "md", "jobs": 1}"#,
    )
    .unwrap();

    // config alone: markdown output for the configured scenario
    let out = bin().arg("--config").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("# "));
    assert!(text.contains("craig-lemma-2.3"));

    // explicit flags override the file
    let out = bin()
        .arg("--config")
        .arg(&path)
        .args(["--format", "json", "--scenario", "s4-l4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenarios"][0]["name"], "s4-l4");

    let out = bin()
        .arg("--config")
        .arg(dir.join("reflinv_no_such_cfg.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_file(&path).ok();
}

#[test]
fn rejects_malformed_config_keys() {
    let path = std::env::temp_dir().join("reflinv_cli_bad_cfg.json");
    std::fs::write(&path, r#"{"max_order": "lots"}"#).unwrap();
    let out = bin().arg("--config").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max_order"));
    std::fs::remove_file(&path).ok();
}
