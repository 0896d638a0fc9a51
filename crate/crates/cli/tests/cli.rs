use std::process::{Command, Output};

fn quadrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadrank"))
        .args(args)
        .env_remove("QUADRANK_WIDTH")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = quadrank(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn table_rows() {
    let rows = json(&["--json", "table", "--t-max", "6"]);
    let pairs: Vec<(u64, u64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["g"].as_u64().unwrap(), r["n"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, [(5, 1), (8, 3), (12, 6), (17, 10), (23, 15), (30, 21), (38, 28)]);
    for r in rows.as_array().unwrap() {
        assert_eq!(r["sym2_dim"], r["target_dim"]);
    }
    let text = stdout(&quadrank(&["table", "--t-max", "6"]));
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn certify_16_8() {
    let cert = json(&["--json", "certify", "--g", "16", "--n", "8"]);
    assert_eq!(cert["a"], "13/272");
    let comps: Vec<&str> = cert["components"].as_array().unwrap().iter().map(|c| c["c"].as_str().unwrap()).collect();
    assert_eq!(comps, ["7/272", "1/34"]);
    assert_eq!(cert["residual"]["lambda"], "0");
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["--json", "verify", "all", "--t-max", "3"][..],
        &["--json", "class", "quad", "--t", "2"],
        &["--json", "pullback", "--preset", "quad3-to-168"],
    ] {
        assert_eq!(quadrank(args).stdout, quadrank(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_all_passes() {
    let out = quadrank(&["verify", "all", "--t-max", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(" 0 failed"));
}

#[test]
fn class_commands() {
    let q = json(&["--json", "class", "quad", "--t", "0"]);
    assert_eq!(q["space"]["g"], 5);
    let text = stdout(&quadrank(&["class", "canonical", "--g", "16", "--n", "8"]));
    assert!(text.contains("13·λ"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["class", "quad", "--t", "10"][..],
        &["class", "canonical", "--g", "0", "--n", "2"],
        &["verify", "all", "--t-max", "10"],
        &["certify", "--g", "20", "--n", "3"],
        &["certify", "--g", "16", "--n", "8", "--catalog", "/nonexistent.json"],
        &["pullback", "--preset", "nope"],
        &["table", "--bogus"],
    ] {
        let out = quadrank(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn narrow_width_wraps() {
    let out = Command::new(env!("CARGO_BIN_EXE_quadrank"))
        .args(["class", "quad", "--t", "3"])
        .env("QUADRANK_WIDTH", "40")
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.lines().count() > 2);
    assert!(text.lines().all(|l| l.chars().count() <= 60), "{text}");
}
