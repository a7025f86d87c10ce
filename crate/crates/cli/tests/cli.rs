use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hive-lr")).args(args).env_remove("HIVE_LR_MAX_WEIGHT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn lrcoef_both_engines() {
    let o = run(&["lrcoef", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "hive: 2\ntableau: 2\n");
    let v = json(&["lrcoef", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--method", "both"]);
    assert_eq!(v["hive"], 2);
    assert_eq!(v["tableau"], 2);
}

#[test]
fn skew_json_schema() {
    let v = json(&["skew", "--shape", "4,3,2,1/2,2"]);
    assert_eq!(v["method"], "hive");
    assert_eq!(v["query"]["outer"], serde_json::json!([4, 3, 2, 1]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 7);
    for t in terms {
        let coeff = t["coeff"].as_u64().unwrap();
        let expected = if t["partition"] == serde_json::json!([3, 2, 1]) { 2 } else { 1 };
        assert_eq!(coeff, expected);
    }
    assert_eq!(v["max_multiplicity"], 2);
    // parse, re-serialize, parse again
    let again: Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn product_both_is_two_reports() {
    let v = json(&["product", "--mu", "2,1", "--nu", "2,1", "--method", "both"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["method"], "hive");
    assert_eq!(reports[1]["method"], "tableau");
    assert_eq!(reports[0]["terms"], reports[1]["terms"]);
}

#[test]
fn mf_verdicts() {
    let o = run(&["mf", "skew", "--shape", "9^2,6^3/5^2,2", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("multiplicity-free (R2"), "{text}");

    let v = json(&["mf", "product", "--mu", "2,1", "--nu", "2,1"]);
    assert_eq!(v["multiplicity_free"], false);
    assert_eq!(v["cases"], serde_json::json!([]));
    assert_eq!(v["witness"]["partition"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["witness"]["coeff"], 2);

    let v = json(&["mf", "product", "--mu", "3", "--nu", "7,5,5,2"]);
    assert_eq!(v["cases"], serde_json::json!(["P1"]));
    assert_eq!(v["witness"], Value::Null);

    let v = json(&["mf", "skew-product", "--theta", "3", "--phi", "4,4,4/2,1", "--check"]);
    assert_eq!(v["multiplicity_free"], true);
}

#[test]
fn witness_output() {
    let o = run(&["witness", "Q1", "--params", "a=2,b=1,c=2,d=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("constructed: 3,2,1\ncoefficient: 2"));
    let v = json(&["witness", "U3ii", "--params", "a=7,b=5,c=3,d=3"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["expected"], "at least 2");
}

#[test]
fn hive_dump() {
    let o = run(&["hives", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--n", "3", "--dump"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("2 LR-hives with n=3\n"));
    assert_eq!(text.matches("\n0\n").count(), 2);
    let v = json(&["hives", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--n", "3", "--dump"]);
    let hives = v["hives"].as_array().unwrap();
    assert_eq!(hives.len(), 2);
    // rows apex to base
    assert_eq!(hives[0][0], serde_json::json!([0]));
    assert_eq!(hives[0][3], serde_json::json!([6, 6, 5, 3]));
}

#[test]
fn verify_sweeps() {
    let v = json(&["verify", "--family", "products", "--box", "1x1"]);
    assert_eq!((v["checked"].as_u64(), v["disagree"].as_u64()), (Some(1), Some(0)));
    let v = json(&["verify", "--family", "skews", "--box", "3x3", "--sample", "10", "--seed", "4"]);
    assert_eq!(v["checked"], 10);
    assert_eq!(v["disagree"], 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["lrcoef", "--lambda", "3,x", "--mu", "1", "--nu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["mf", "skew", "--shape", "2,2/1,1"]).status.code(), Some(2));
    assert_eq!(run(&["witness", "Q9", "--params", "a=1"]).status.code(), Some(2));
    assert_eq!(run(&["witness", "Q1", "--params", "a=1,b=1,c=2,d=1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "triples", "--box", "3x3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_hive-lr"))
        .args(["lrcoef", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"])
        .env("HIVE_LR_MAX_WEIGHT", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["skew", "--shape", "6^2,4^2,2^2/3^3", "--method", "both", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let sweep = ["verify", "--family", "products", "--box", "3x2", "--sample", "15", "--seed", "2"];
    assert_eq!(run(&sweep).stdout, run(&sweep).stdout);
}
