use modeq21::cli::{parse_rational, run};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("modeq21").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn expand_prints_pentagonal_series() {
    let (code, out, _) = call(&["expand", "--symbol", "f1", "--order", "16"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 - q - q^2 + q^5 + q^7 - q^12 - q^15");
}

#[test]
fn verify_json_report() {
    let (code, out, _) = call(&["verify", "--id", "W2", "--order", "60", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["id"], "W2");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(&keys[..3], ["id", "status", "order"]);
    assert_eq!(*keys.last().unwrap(), "elapsed_ms");
    assert!(v["resolution"].is_array());
}

#[test]
fn failures_and_usage_errors() {
    assert_eq!(call(&["verify", "--id", "W2", "--order", "0"]).0, 2);
    assert_eq!(call(&["verify", "--id", "NOPE"]).0, 2);
    assert_eq!(call(&["eval-r", "--k", "7", "--n", "1/0"]).0, 2);
    assert_eq!(call(&["eval-r", "--k", "7", "--n", "6", "--digits", "5"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    // printed W7 fails
    let (code, out, _) = call(&["verify", "--id", "W7", "--order", "30"]);
    assert_eq!(code, 1);
    assert!(out.contains("fail"));
    // a series-mode command on a numeric identity
    assert_eq!(call(&["verify", "--id", "R7R9"]).0, 2);
}

#[test]
fn eval_r_reports_certified_digits() {
    let (code, out, _) = call(&["eval-r", "--k", "7", "--n", "6", "--digits", "50"]);
    assert_eq!(code, 0);
    assert!(out.contains("2.624283028230087789359"));
    assert!(out.contains("certified digits"));
    let (_, out, _) = call(&["eval-r", "--k", "7", "--n", "9", "--primed", "--digits", "30", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["value"].as_str().unwrap().starts_with("1.539222338420433185"));
}

#[test]
fn vanish_and_signs() {
    let (code, out, _) = call(&["vanish", "--id", "F-U2-FACTORS", "--order", "40", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vanishing"], serde_json::json!([2]));
    assert_eq!(v["nonvanishing"], serde_json::json!([1]));
    let (code, out, _) = call(&["signs", "--id", "W3", "--order", "20"]);
    assert_eq!(code, 0);
    assert!(out.contains(": +"));
    assert_eq!(call(&["signs", "--id", "E15"]).0, 2);
}

#[test]
fn numeric_commands() {
    assert_eq!(call(&["check-values", "--id", "S1", "--digits", "40"]).0, 0);
    assert_eq!(call(&["check-values", "--id", "S13", "--digits", "40"]).0, 1);
    assert_eq!(call(&["check-transforms", "--k", "7", "--n", "3/2", "--m", "2/3", "--digits", "30"]).0, 0);
    let (code, out, _) = call(&["numeric-identity", "--id", "R3R49", "--n", "1/6", "--digits", "30", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["digits"], 30);
    assert_eq!(call(&["cross-check", "--symbol", "r", "--q", "3/100"]).0, 0);
    assert_eq!(call(&["cross-check", "--symbol", "u", "--q", "9/10", "--order", "10"]).0, 2);
}

#[test]
fn catalog_export_and_errata() {
    let (code, out, _) = call(&["export-catalog"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["identities"].as_array().unwrap().len(), 23);
    assert_eq!(v["closed_forms"].as_array().unwrap().len(), 33);
    let (code, out, _) = call(&["errata", "--order", "40", "--digits", "30", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn rational_arguments() {
    assert_eq!(parse_rational("7/3").unwrap().to_string(), "7/3");
    assert_eq!(parse_rational(" -4/6 ").unwrap().to_string(), "-2/3");
    assert_eq!(parse_rational("5").unwrap().to_string(), "5");
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("0.5").is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_modeq21");
    let status = std::process::Command::new(bin)
        .args(["verify", "--id", "W2", "--order", "0"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let status = std::process::Command::new(bin)
        .args(["verify", "--id", "L21-7", "--order", "20"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
}
