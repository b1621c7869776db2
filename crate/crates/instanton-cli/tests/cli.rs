use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_instanton")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn rank_one_closed_form() {
    let o = run(&["zinst", "--rank", "1", "--q-order", "8"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("PASS exp(q/(e1 e2)) through q^8"));
    assert!(out.ends_with("overall: PASS\n"));
}

#[test]
fn ochiai_passes() {
    assert_eq!(code(&run(&["betti", "--ochiai", "--q-order", "8"])), 0);
}

#[test]
fn unknown_flag_is_usage_error() {
    let o = run(&["zinst", "--no-such-flag"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("Usage"));
    assert_eq!(code(&run(&["no-such-command"])), 2);
}

#[test]
fn invalid_values_exit_two() {
    assert_eq!(code(&run(&["blowup-check", "--rank", "2", "--sector", "2"])), 2);
    assert_eq!(code(&run(&["zinst", "--rank", "0"])), 2);
    assert_eq!(code(&run(&["perturb-check", "--eps-order", "1"])), 2);
    assert_eq!(code(&run(&["zinst", "--q-order", "-1"])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_instanton")).args(["ktheory"]).env("INSTANTON_THREADS", "0").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn json_is_reproducible() {
    let args = ["prepotential", "--q-order", "2", "--seed", "11", "--samples", "2", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "prepotential");
    assert_eq!(v["seed"], 11);
    assert_eq!(v["pass"], true);
    assert_eq!(v["rank_two"], serde_json::Value::Null);
    assert_eq!(v["data"]["rank_two"]["f0"][1], "-1/2");
    let c = run(&["prepotential", "--q-order", "2", "--seed", "12", "--samples", "2", "--json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_file_and_thread_cap() {
    let path = std::env::temp_dir().join(format!("instanton-cli-test-{}.json", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_instanton"))
        .args(["perturb-check", "--eps-order", "4", "--k-range", "2", "--json", "--out"])
        .arg(&path)
        .env("INSTANTON_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["parameters"]["k_range"], 2);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3 + 5 + 3 + 1 + 5);
    assert_eq!(v["data"]["e1e2_c_n_over_n_factorial"][0], "1");
}
