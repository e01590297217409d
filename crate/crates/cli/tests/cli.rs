use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jm-expand"))
        .args(args)
        .env_remove("JM_EXPAND_CACHE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn rows(v: &Value) -> Vec<(Vec<u64>, String)> {
    v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let p = r["partition"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (p, r["value"].as_str().unwrap().to_string())
        })
        .collect()
}

fn value_of(v: &Value, partition: &[u64]) -> String {
    rows(v).into_iter().find(|(p, _)| p == partition).map(|(_, v)| v).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("jm-expand-{}-{name}", std::process::id()))
}

#[test]
fn expand_examples() {
    let v = json(&["expand", "--family", "a", "--k", "3", "--partition", "4"]);
    assert_eq!(rows(&v), vec![(vec![4], "5".to_string())]);
    assert_eq!(v["parameters"]["k"], "3");
    let v = json(&["expand", "--family", "c", "--k", "3", "--all-of-size", "3"]);
    assert_eq!(value_of(&v, &[2, 1]), "4");
    let v = json(&["expand", "--family", "b", "--k", "2", "--partition", "3"]);
    assert_eq!(value_of(&v, &[3]), "2");
}

#[test]
fn oracle_examples() {
    let v = json(&["oracle", "--group", "sym", "--function", "h", "--k", "2", "--n", "3"]);
    assert_eq!(value_of(&v, &[1, 1, 1]), "3");
    assert_eq!(value_of(&v, &[2, 1]), "0");
    assert_eq!(value_of(&v, &[3]), "2");
    let v = json(&["oracle", "--group", "hecke", "--function", "e", "--k", "1", "--n", "2"]);
    assert_eq!(value_of(&v, &[2]), "1");
    assert_eq!(value_of(&v, &[1, 1]), "0");
    let v = json(&[
        "oracle", "--group", "partial", "--function", "h", "--k", "2", "--n", "4", "--verify-recurrence",
    ]);
    assert_eq!(v["result"]["verify_recurrence"], "pass");
}

#[test]
fn verify_recurrence_for_every_group_and_function() {
    for group in ["sym", "hecke", "partial"] {
        for f in ["h", "e", "p"] {
            let v = json(&["oracle", "--group", group, "--function", f, "--k", "3", "--n", "3", "--verify-recurrence"]);
            assert_eq!(v["result"]["verify_recurrence"], "pass", "{group} {f}");
        }
    }
}

#[test]
fn series_and_asymptotics() {
    let v = json(&["series", "--which", "cycle", "--n", "4", "--order", "5"]);
    let c: Vec<&str> = v["result"]["coefficients"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(c, ["0", "0", "0", "5", "0", "70"]);
    let v = json(&["series", "--which", "F22", "--n", "4", "--order", "4"]);
    assert_eq!(v["result"]["coefficients"][2], "1");
    assert_eq!(v["result"]["coefficients"][4], "20");
    let v = json(&["asymptotics", "--which", "subleading", "--partition", "2"]);
    assert_eq!(v["result"]["value"], "1");
    let v = json(&["asymptotics", "--which", "leading", "--partition", "3,2"]);
    assert_eq!(v["result"]["value"], "2");
}

#[test]
fn conjecture_passes_at_endpoints() {
    let v = json(&["conjecture", "--kmax", "3", "--nmax", "4", "--alphas", "1,2"]);
    assert_eq!(v["result"]["failures"], "0");
    assert_ne!(v["result"]["instances"], "0");
    let first = &v["result"]["rows"][0];
    for key in ["alpha", "n", "k", "rho", "m", "lhs", "rhs", "pass"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn empirical_fit() {
    let v = json(&["conjecture", "--kmax", "2", "--nmax", "2", "--fit", "2"]);
    assert_eq!(v["result"]["empirical_fit"]["fits"][2]["polynomial"], "alpha - 1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["expand", "--family", "a", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--family", "x", "--k", "1", "--partition", "2"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--which", "hook", "--n", "2", "--order", "3"]).status.code(), Some(2));
    let guard = run(&["oracle", "--group", "sym", "--function", "h", "--k", "2", "--n", "9"]);
    assert_eq!(guard.status.code(), Some(3));
    let degenerate = run(&["conjecture", "--kmax", "2", "--nmax", "2", "--alphas", "0"]);
    assert_eq!(degenerate.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&degenerate.stderr).contains("alpha = 0"));
}

#[test]
fn human_output_is_a_table() {
    let out = run(&["expand", "--family", "a", "--k", "2", "--all-of-size", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["partition", "value"]);
    assert!(lines.iter().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["1,1,1", "3"]));
}

#[test]
fn cache_round_trip_via_flag_and_env() {
    let path = temp_path("cache.txt");
    let _ = std::fs::remove_file(&path);
    let p = path.to_str().unwrap();
    let first = json(&["--cache", p, "expand", "--family", "c", "--k", "4", "--all-of-size", "4"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# jm-expand cache v1"));
    assert!(text.lines().count() > 1);

    let out = Command::new(env!("CARGO_BIN_EXE_jm-expand"))
        .args(["--json", "expand", "--family", "c", "--k", "4", "--all-of-size", "4"])
        .env("JM_EXPAND_CACHE", p)
        .output()
        .unwrap();
    assert!(out.status.success());
    let second: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(first["result"], second["result"]);

    std::fs::write(&path, "# jm-expand cache v1\nc 4 2,2 not-a-number\n").unwrap();
    let bad = run(&["--cache", p, "expand", "--family", "c", "--k", "4", "--partition", "2,2"]);
    assert_eq!(bad.status.code(), Some(1));
    std::fs::remove_file(&path).unwrap();
}
