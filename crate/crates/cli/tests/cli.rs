use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn constructive_bound_example() {
    let out = run(&[
        "bound", "--p", "5", "--n", "100", "--field", "p2", "--method", "constructive", "--policy", "empirical",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value_int"], 300);
    assert_eq!(v["witnesses"]["l_k"], 97);
    assert_eq!(v["witnesses"]["l_k1"], 101);
    let places = v["witnesses"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "places")
        .unwrap();
    assert_eq!((places["lhs"].as_str(), places["rhs"].as_str()), (Some("408"), Some("400")));
}

#[test]
fn gaps_example() {
    let out = run(&["gaps", "--limit", "1000000", "--alpha", "2/3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violations"], serde_json::json!([7]));
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn mult_example() {
    let out = run(&["mult", "--q", "2", "--n", "3", "--allow-deg2", "--verify", "exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["verification"]["failures"], serde_json::json!([]));
    assert_eq!(v["verification"]["pairs_checked"], 64);
}

#[test]
fn emitted_tensor_round_trips() {
    let path = std::env::temp_dir().join(format!("symrank-tensor-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["mult", "--q", "4", "--n", "3", "--emit-tensor", p]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let t = symrank::mult::parse_tensor(&text).unwrap();
    assert_eq!((t.q(), t.n(), t.rank()), (4, 3, 5));
    let r = symrank::mult::verify(&t, symrank::mult::VerifyMode::Exhaustive, 1).unwrap();
    assert!(r.failures.is_empty());
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_errors_exit_1_with_reason() {
    for args in [
        &["bound", "--p", "5"][..],
        &["frobnicate"][..],
        &["gaps", "--limit", "1000", "--alpha", "three"][..],
        &["genus", "--N", "10", "--l", "3"][..],
        &["gaps", "--limit", "100", "--format", "csv"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let v = json(&out);
        assert!(v["reason"].as_str().is_some_and(|r| !r.is_empty()), "{args:?}");
    }
}

#[test]
fn infeasible_exits_2_with_reason() {
    for args in [
        &["bound", "--p", "4", "--n", "10"][..],
        &["mult", "--q", "2", "--n", "4"][..],
        &["mult", "--q", "2", "--n", "5", "--allow-deg2"][..],
        &["bound", "--p", "5", "--n", "3", "--method", "constructive"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json(&out);
        assert_eq!(v["error"], "infeasible", "{args:?}");
        assert!(v["reason"].is_string());
    }
}

#[test]
fn selftest_failure_exits_3() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let failing: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["passed"] == false)
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["constructive_vs_closed_form"]);
}

#[test]
fn csv_table_has_header_and_rows() {
    let out = run(&["table", "--p-set", "5,7", "--n-range", "100:200:100", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("p,n,field,method,value_real,value_int,valid,policy,l_k,l_k1,genus,caveats")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 8);
    assert!(rows[0].starts_with("5,100,p2,constructive,300"));
}

#[test]
fn text_format_is_path_lines() {
    let out = run(&["genus", "--N", "1111", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "genus: 101"));
}

#[test]
fn genus_family_form() {
    let v = json(&run(&["genus", "--family", "23l", "--l", "13", "--p", "11"]));
    assert_eq!(v["genus"], 27);
}
