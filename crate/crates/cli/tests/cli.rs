use std::process::{Command, Output};

fn ims(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ims"))
        .args(args)
        .env_remove("IMS_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn markov_normalize_vanishes() {
    let o = ims(&["normalize", "-n", "5", "--markov", "x1 * x2' * x3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn conditional_entropy_rendering() {
    let o = ims(&["entropy", "-n", "3", "x1 * x2'"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "+H(x1,x2) \u{2212}H(x2)");
}

#[test]
fn kset_json_for_five_variables() {
    let o = ims(&["kset", "-n", "5", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n"], 5);
    let eliminated: Vec<u64> = v["eliminated"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    let kept: Vec<u64> = (0..32).filter(|k| !eliminated.contains(k)).collect();
    assert_eq!(
        kept,
        [0, 1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16, 24, 28, 30, 31]
    );
    assert!(v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .all(|t| t["i"].is_u64()));
}

#[test]
fn normalize_json_is_an_atom_set() {
    let o = ims(&["normalize", "-n", "2", "--format", "json", "x1 + x2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n"], 2);
    assert_eq!(v["atoms"], serde_json::json!([1, 2, 3]));
}

#[test]
fn eq_exit_code_is_the_verdict() {
    let same = ims(&["eq", "-n", "2", "x1 + x2", "x1 + x2 * x1'"]);
    assert_eq!(same.status.code(), Some(0));
    assert_eq!(stdout(&same).lines().next(), Some("equal"));

    let differ = ims(&["eq", "-n", "2", "--format", "json", "x1", "x2"]);
    assert_eq!(differ.status.code(), Some(1));
    let v = json(&differ);
    assert_eq!(v["verdict"], "not_equal");
    assert!(v["counterexample"]["distribution"].is_object());
}

#[test]
fn markov_eq_uses_the_quotient() {
    let args = ["eq", "-n", "3", "x1 * x3", "x1 * x2 * x3"];
    assert_eq!(ims(&args).status.code(), Some(1));
    let mut markov = args.to_vec();
    markov.push("--markov");
    assert_eq!(ims(&markov).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "eq", "-n", "3", "--seed", "7", "--format", "json", "x1 * x2", "x1 * x3",
        ][..],
        &[
            "verify",
            "--random-markov",
            "-n",
            "4",
            "--seed",
            "11",
            "--format",
            "json",
        ][..],
        &["entropy", "-n", "4", "--markov", "x1 + x4'"][..],
    ] {
        let a = ims(args);
        let b = ims(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        &["normalize", "-n", "3", "x1 +"][..],
        &["normalize", "-n", "3", "x4"][..],
        &["normalize", "-n", "2", "--markov", "x1"][..],
        &["normalize", "-n", "0", "1"][..],
        &["normalize", "-n", "17", "x1"][..],
        &["frobnicate"][..],
        &["verify"][..],
    ] {
        let o = ims(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn max_n_env_var() {
    let o = Command::new(env!("CARGO_BIN_EXE_ims"))
        .args(["normalize", "-n", "17", "x17"])
        .env("IMS_MAX_N", "20")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_ims"))
        .args(["normalize", "-n", "3", "x1"])
        .env("IMS_MAX_N", "99")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_markov_chain_and_file() {
    let o = ims(&[
        "verify",
        "--random-markov",
        "-n",
        "5",
        "--seed",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_ok"], true);
    assert_eq!(v["constraints"].as_array().unwrap().len(), 3);

    // x3 is a copy of x1 while x2 is independent noise, so x1 -> x2 -> x3 fails.
    let dir = std::env::temp_dir().join(format!("ims-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dist.json");
    let mut pmf = Vec::new();
    for x1 in 0..2 {
        for x2 in 0..2 {
            pmf.push(serde_json::json!({"outcome": [x1, x2, x1], "p": 0.25}));
        }
    }
    let d = serde_json::json!({"n": 3, "alphabets": [2, 2, 2], "pmf": pmf});
    std::fs::write(&path, d.to_string()).unwrap();
    let o = ims(&["verify", "--dist", path.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("VIOLATED"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn complete_reads_n_from_header() {
    let dir = std::env::temp_dir().join(format!("ims-complete-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("markov3.pres");
    std::fs::write(&path, include_str!("../../core/data/markov_3.pres")).unwrap();
    let o = ims(&[
        "complete",
        "--pres",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["complete"], true);
    assert_eq!(v["eliminated"], serde_json::json!([5]));
    std::fs::remove_dir_all(&dir).ok();

    let o = ims(&["complete", "--pres", "/nonexistent/file.pres"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_single_criterion() {
    let o = ims(&["selftest", "--only", "8"]);
    assert!(stdout(&o).starts_with("[PASS] 8."), "{}", stdout(&o));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ims(&["selftest", "--only", "99"]).status.code(), Some(2));
}
