use std::process::{Command, Output};

use serde_json::Value;

fn hyperd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperd")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn num(v: &Value) -> f64 {
    v.as_f64().or_else(|| v.to_string().parse().ok()).expect("number")
}

#[test]
fn eval_d_of_0f1() {
    let out = hyperd(&["eval", "--eq", "0f1", "--func", "D", "--m", "2", "--z", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rec = &v["records"][0];
    let want = hyperd::d_eval(&hyperd::DSpec::f0(2), hyperd::C64::new(0.5, 0.0)).unwrap();
    assert_eq!(num(&rec["value_re"]), want.value.re);
    assert!(num(&rec["err_estimate"]) <= 1e-12);
}

#[test]
fn classical_parameters_give_exponential() {
    let out = hyperd(&["eval", "--eq", "1f1", "--func", "F", "--a", "1", "--c", "1", "--z", "0.3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((num(&v["records"][0]["value_re"]) - 0.3f64.exp()).abs() < 1e-12);
    // both conventions are echoed
    assert!(v["params"]["lie"]["theta"].is_object());
    assert!(v["params"]["classical"]["a"].is_object());
}

#[test]
fn eval_u_of_2f1_matches_library() {
    let out = hyperd(&["eval", "--eq", "2f1", "--func", "U", "--m", "0", "--beta", "0.3", "--mu", "0.2", "--z=-0.4"]);
    assert_eq!(out.status.code(), Some(0));
    let c = |x| hyperd::C64::new(x, 0.0);
    let want = hyperd::u2(c(0.0), c(0.3), c(0.2), c(-0.4), hyperd::URoute::LogPlusD).unwrap();
    assert_eq!(num(&json(&out)["records"][0]["value_re"]), want.value.re);
}

#[test]
fn complex_literals_and_grids() {
    let out = hyperd(&["eval", "--eq", "0f1", "--func", "F", "--alpha", "0.5+0.25i", "--z-grid", "0:1:3,-1:1:2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 6);
    assert_eq!(num(&recs[0]["z_im"]), -1.0);
    assert_eq!(num(&recs[5]["z_re"]), 1.0);
}

#[test]
fn domain_error_exits_2_with_structured_record() {
    let out = hyperd(&["eval", "--eq", "2f1", "--func", "D", "--m", "0", "--beta", "0.3", "--mu", "0.2", "--z", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "DomainError");
}

#[test]
fn mixed_conventions_rejected() {
    let out = hyperd(&["eval", "--eq", "0f1", "--func", "F", "--alpha", "1", "--c", "2", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hyperd(&["eval", "--eq", "0f1", "--func", "F", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hyperd(&["eval", "--eq", "3f2", "--func", "F", "--alpha", "1", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_json_carry_identical_numbers() {
    let base = ["eval", "--eq", "1f1", "--func", "U", "--theta", "0.4", "--m", "1", "--z", "0.7", "--z", "1+2i"];
    let j = json(&hyperd(&[&base[..], &["--format", "json"]].concat()));
    let csv = String::from_utf8(hyperd(&[&base[..], &["--format", "csv"]].concat()).stdout).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    for (row, rec) in lines.zip(j["records"].as_array().unwrap()) {
        let cells: Vec<&str> = row.split(',').collect();
        for key in ["z_re", "z_im", "value_re", "value_im", "err_estimate", "terms_used"] {
            let i = header.iter().position(|h| *h == key).unwrap();
            assert_eq!(cells[i], rec[key].to_string(), "{key}");
        }
    }
}

#[test]
fn output_is_stable_across_runs() {
    let args = ["verify", "--suite", "relations"];
    let a = hyperd(&args);
    let b = hyperd(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn single_relation_report() {
    let out = hyperd(&["verify", "--id", "q.sasa3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["relations_checked"], 1);
    assert_eq!(v["records"][0]["key"], "relation.q.sasa3");
    let out = hyperd(&["verify", "--id", "q.nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bessel_suite_runs() {
    let out = hyperd(&["verify", "--suite", "bessel", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bessel.K0(1).quadrature"));
    assert!(text.contains("bessel.hankel.sum"));
}

#[test]
fn tolerance_override_can_fail_a_suite() {
    let out = hyperd(&["verify", "--suite", "gamma", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn catalog_lists_every_record() {
    let v = json(&hyperd(&["catalog"]));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 62);
    assert!(list.iter().any(|e| e["id"] == "f2.contiguity.5"));
}

#[test]
fn table_has_one_row_per_point() {
    let out = hyperd(&[
        "table", "--eq", "1f1", "--funcs", "F,U,logsol", "--theta", "0.4", "--m", "1", "--z-grid", "0.5:1:2,0:0.5:2",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("z_re,z_im,F_re,F_im,F_err,U_re"));
}

#[test]
fn max_terms_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperd"))
        .args(["eval", "--eq", "0f1", "--func", "F", "--alpha", "0.5", "--z", "30"])
        .env("HYPERD_MAX_TERMS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "NoConvergence");
}
