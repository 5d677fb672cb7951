use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn matcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matcomp")).args(args).output().expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = matcomp(args);
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn structure_of_s_zero() {
    let (code, out) = run(&["structure", &path("s_zero.json"), "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 1);
    assert_eq!(v["eta"], serde_json::json!(["s"]));
    assert_eq!(v["phi"], serde_json::json!(["1"]));
    assert_eq!(v["orders"], serde_json::json!([-1]));
    assert_eq!(v["cols"], serde_json::json!([0]));
    assert_eq!(v["rows"], serde_json::json!([]));
}

#[test]
fn structure_of_identity_is_trivial() {
    let (code, out) = run(&["structure", &path("identity.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("invariant factors: [1, 1]"));
    assert!(out.contains("orders at infinity: [0, 0]"));
}

#[test]
fn structure_of_diag_s_inv_s() {
    let (code, out) = run(&["structure", &path("diag_s_inv_s.json"), "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["orders"], serde_json::json!([-1, 1]));
}

#[test]
fn malformed_and_missing_files() {
    let out = matcomp(&["structure", &path("malformed.json")]);
    assert_eq!(out.status.code(), Some(100));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    assert_eq!(matcomp(&["structure", &path("absent.json")]).status.code(), Some(100));
    assert_eq!(matcomp(&["no-such-command"]).status.code(), Some(100));
    assert_eq!(matcomp(&["--help"]).status.code(), Some(0));
}

#[test]
fn infinite_only_example_depends_on_the_ring() {
    let (code, out) = run(&["inf", &path("s_zero.json"), &path("inf_example.json"), "--ring", "poly"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL max-sum[j=0]"), "{out}");
    let (code, _) = run(&["check", &path("s_zero.json"), &path("inf_example.json"), "--ring", "rational"]);
    assert_eq!(code, 0);
}

#[test]
fn verdict_documents() {
    let (code, out) = run(&["check", &path("s_zero.json"), &path("inf_example.json"), "--output", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "verdict/1");
    assert_eq!(v["status"], "infeasible");
    assert_eq!(v["ring"], "poly");
    let failing: Vec<_> = v["conditions"].as_array().unwrap().iter().filter(|c| c["holds"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["lhs"], "1");
    assert_eq!(failing[0]["rhs"], "0");
}

#[test]
fn zero_rows_and_same_data() {
    assert_eq!(run(&["check", &path("s_zero.json"), &path("same_data.json")]).0, 0);
}

#[test]
fn explain_lists_every_condition() {
    let (code, out) = run(&["complete", &path("s_zero.json"), &path("diag_s_s.json"), "--explain"]);
    assert_eq!(code, 0);
    for id in ["num-interlacing", "order-interlacing", "eta-bar", "col-majorization", "row-majorization", "degree-sum"]
    {
        assert!(out.contains(id), "{id} missing from {out}");
    }
    assert!(out.contains("a = [0]"));
}

#[test]
fn mode_projection_and_mismatch() {
    assert_eq!(run(&["check", &path("s_zero.json"), &path("diag_s_s.json"), "--mode", "inf"]).0, 0);
    assert_eq!(matcomp(&["fin-inf", &path("s_zero.json"), &path("inf_example.json")]).status.code(), Some(101));
    assert_eq!(
        matcomp(&["check", &path("s_zero.json"), &path("inf_example.json"), "--mode", "nope"]).status.code(),
        Some(100)
    );
}

#[test]
fn rational_partial_example() {
    assert_eq!(run(&["check", &path("s_zero.json"), &path("rational_fin_inf.json"), "--ring", "rational"]).0, 0);
}

#[test]
fn hypothesis_violation_has_its_own_code() {
    let (code, out) = run(&["check", &path("s_zero.json"), &path("first_order_bad.json")]);
    assert_eq!(code, 2);
    assert!(out.contains("hypothesis violated"));
}

#[test]
fn column_completion_of_the_transpose() {
    let (code, _) = run(&["inf", &path("s_zero_t.json"), &path("inf_example.json"), "--column"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["inf", &path("s_zero_t.json"), &path("inf_example.json"), "--column", "--ring", "rational"]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_default_campaign_verifies() {
    let (code, out) = run(&["oracle"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("disagreements=0"));
}

#[test]
fn oracle_budget_is_enforced() {
    let out = matcomp(&["oracle", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(102));
}

#[test]
fn oracle_is_reproducible() {
    let args = ["oracle", "--rows", "2", "--samples", "4", "--seed", "9", "--mode", "fin-inf", "--output", "json"];
    let a = matcomp(&args);
    let b = matcomp(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
