use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilclass"))
        .args(args)
        .env_remove("NILCLASS_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn casimir_of_n1_zero() {
    let o = run(&["casimir", "(0^5,13+15+24,14-23+25,16+27)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "n1", "--params", "gamma=1"]).status.code(), Some(0));

    let bad = run(&["check", "(0,0,12,34)"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("d^2 e4 = e124"));

    let err = run(&["check", "(0,2)"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));

    assert_eq!(run(&["tables", "T7"]).status.code(), Some(2));
}

#[test]
fn table_json() {
    let o = run(&["tables", "T3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["table"], "T3");
    assert_eq!(v["pass"], true);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["pass"] == true));
    let mut labels: Vec<&str> = rows.iter().map(|r| r["row"].as_str().unwrap()).collect();
    labels.dedup();
    assert_eq!(labels.len(), 10);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["tables", "all", "--format", "json"][..],
        &["fingerprint", "m3", "--params", "alpha=1,beta=0", "--format", "json"][..],
        &["catalog", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_flag_and_env_agree() {
    let a = run(&["casimir", "n2", "--params", "alpha=1", "--seed", "99"]);
    let b = Command::new(env!("CARGO_BIN_EXE_nilclass"))
        .args(["casimir", "n2", "--params", "alpha=1"])
        .env("NILCLASS_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).trim(), "2");
}

#[test]
fn builtin_certificates() {
    let o = run(&["certify", "builtin"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn family_input() {
    let o = run(&["jtype", "family1", "--params", "e=1,n=1,d=1,a=3,b=0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SnN"));
}
