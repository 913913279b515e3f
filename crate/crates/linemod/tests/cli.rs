use std::process::Command;

use linemod::cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["linemod"];
    full.extend_from_slice(args);
    full.push("--json");
    let out = run(full);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (serde_json::from_str(&out.stdout).unwrap(), out.code)
}

#[test]
fn certify_line_example() {
    let (v, code) = json(&["certify-line", "--algebra", "sl11_Hhat", "--gen", "h - t", "--gen", "e + f", "--max-degree", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["dims"], serde_json::json!([1, 2, 3, 4, 5, 6, 7]));
    assert_eq!(v["pass"], true);
}

#[test]
fn odd_plane_fails_with_exit_one() {
    let (v, code) = json(&["certify-line", "--algebra", "sl11_Hhat", "--gen", "e", "--gen", "f", "--max-degree", "5"]);
    assert_eq!(code, 1);
    assert!(v["results"]["first_failure"].as_u64().unwrap() <= 4);
}

#[test]
fn classify_line_example() {
    let (v, code) = json(&["classify-line", "--preset", "slc", "--line", "a1 + a2, a3 - 5*a4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["families"], serde_json::json!(["1(a)"]));
}

#[test]
fn sl2_line_is_on_its_pencil_member() {
    let (v, _) = json(&["classify-line", "--preset", "sl2", "--line", "e, h - 3*t"]);
    assert_eq!(v["results"]["delta_squared"], "9");
}

#[test]
fn sl11_line_extraction() {
    let (v, _) = json(&["classify-line", "--preset", "sl11", "--line", "h - 4*t, e + f - 2*t"]);
    assert_eq!(v["results"]["alpha_beta_lambda_gamma"], serde_json::json!(["1", "1", "4", "2"]));
    assert_eq!(v["results"]["gamma2_eq_alpha_beta_lambda"], true);
}

#[test]
fn sl21_suite_reports_the_trace() {
    let (v, code) = json(&["verify-paper", "--suite", "sl21"]);
    assert_eq!(code, 0);
    let check = &v["results"]["checks"][1]["detail"];
    assert_eq!(check["normal_form(y1*y1*t)"], "0");
    assert!(!check["trace"].as_array().unwrap().is_empty());
}

#[test]
fn inadmissible_induction_is_a_certified_failure() {
    let (v, code) = json(&["induce", "--table", "sl11", "--sub", "h, e + f", "--phi", "1, 5", "--max-degree", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["l_h_phi_dims"], serde_json::json!([1, 2, 3, 4, 5]));
    assert!(v["results"]["notes"][0].as_str().unwrap().contains("not a homogenized induced module"));
}

#[test]
fn negative_values_parse() {
    let (v, code) = json(&["admissible", "--table", "slc", "--sub", "a3, a1 - a2", "--phi", "-1/2, 3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["properness"], true);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["linemod", "classify-sub", "--table", "slc", "--samples", "300", "--seed", "7", "--json"];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(["linemod", "certify-line", "--algebra", "sl11_Hhat"]).code, 2);
    let out = run(["linemod", "nf", "--algebra", "sl11_Hhat", "--expr", "e*"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("1:3"));
    assert_eq!(run(["linemod", "show", "--algebra", "nope"]).code, 2);
}

#[test]
fn binary_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("linemod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_linemod"))
        .args(["hilbert", "--algebra", "slc_H", "--max-degree", "4", "--oracle-degree", "3", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["rewrite"], serde_json::json!([1, 4, 10, 20, 35]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn oracle_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_linemod"))
        .args(["hilbert", "--algebra", "sl11_Hhat", "--oracle-degree", "4"])
        .env("LINEMOD_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 10"));
}
