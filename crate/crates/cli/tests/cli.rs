mod common;

use std::process::{Command, Output};

use common::validate_schema;
use serde_json::Value;

const F: &str = "i + z*j + (1/2)*z^2*k";
const G: &str = "(1 + (1/2)*z^2)*i";
const ALPHA: &str = "(2 + (1/2)*z^2)*i + z*j + (1/2)*z^2*k";

fn slicereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slicereg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = slicereg(&all);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    validate_schema(&v).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (v, o.status.code().unwrap())
}

#[test]
fn equiv_reports_cdiv_mismatch() {
    let o = slicereg(&["equiv", F, G]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reason: cdiv mismatch: 1 vs 2 + z^2"), "{}", stdout(&o));
    let (v, code) = json(&["equiv", F, G]);
    assert_eq!(code, 1);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["branch"], "not-slice-preserving");
    let (v, code) = json(&["equiv", F, F]);
    assert_eq!((code, v["equivalent"].clone(), v["reason"].clone()), (0, Value::Bool(true), Value::Null));
}

#[test]
fn invariants_of_the_pair() {
    for (input, cdiv) in [(F, "1"), (G, "2 + z^2")] {
        let (v, code) = json(&["invariants", input]);
        assert_eq!(code, 0);
        assert_eq!(v["trace"], "0");
        assert_eq!(v["norm"], "1 + z^2 + 1/4*z^4");
        assert_eq!(v["cdiv"], cdiv);
    }
    let (v, _) = json(&["invariants", "1 + z^2"]);
    assert_eq!(v["cdiv"], "slice-preserving");
}

#[test]
fn intertwine_and_verify() {
    let (v, code) = json(&["intertwine", "--degree-max", "2", "--trace-free", F, G]);
    assert_eq!(code, 0);
    assert_eq!(v["intertwiners"].as_array().unwrap().len(), 1);
    assert_eq!(v["invertible_on_C"], false);
    let (v, _) = json(&["intertwine", "--degree-max", "2", F, G]);
    assert_eq!(v["intertwiners"].as_array().unwrap().len(), 4);
    let (_, code) = json(&["intertwine", "--degree-max", "1", "i", "1 + i"]);
    assert_eq!(code, 1);

    let (v, code) = json(&["verify", F, G, ALPHA]);
    assert_eq!(code, 0);
    assert_eq!(v["norm_alpha"], "4 + 3*z^2 + 1/2*z^4");
    assert_eq!(v["invertible_on_C"], false);
    let (_, code) = json(&["verify", F, G, "k"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_with_unit_conjugator() {
    // (1 + i)^-1 * j * (1 + i) = -k; a leading minus needs `--`
    let (v, code) = json(&["verify", "--", "-k", "j", "1 + i"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["invertible_on_C"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn orbit_and_classify() {
    let (v, code) = json(&["orbit", "1", "1 + i + E*j"]);
    assert_eq!(code, 1);
    assert_eq!(v["equivalent"], false);
    let (v, code) = json(&["orbit", "i", "3/5*i + 4/5*j"]);
    assert_eq!((code, v["equivalent"].clone()), (0, Value::Bool(true)));
    let (v, _) = json(&["classify", "E*k"]);
    assert_eq!(v["orbit"]["kind"], "generic");
    assert_eq!(v["orbit"]["lambda"], "-1");
    assert_eq!(v["orbit"]["isotropy"], "torus-C*");
}

#[test]
fn eval_modes() {
    let (v, _) = json(&["eval", F, "--at", "j"]);
    assert_eq!(v["value"], "-1 + i - 1/2*k");
    let (v, _) = json(&["eval", F, "--at", "E", "--stem"]);
    assert_eq!(v["value"], "i + E*j - 1/2*k");
    assert_eq!(slicereg(&["eval", F, "--at", "E"]).status.code(), Some(2));
    assert_eq!(slicereg(&["eval", F, "--at", "i", "--stem"]).status.code(), Some(2));
}

#[test]
fn r3_commands() {
    let (v, code) = json(&["invariants", "--algebra", "r3", "(i ; z*j)"]);
    assert_eq!(code, 0);
    assert_eq!(v["norm"], "(1 ; z^2)");
    let (f, h) = ("(i ; 1 + z*j)", "(1 + z*j ; i)");
    let (_, code) = json(&["r3-equiv", f, h]);
    assert_eq!(code, 1);
    let (v, code) = json(&["r3-equiv", f, h, "--allow-swap"]);
    assert_eq!((code, v["branch"].clone()), (0, Value::String("swapped".into())));
    let (_, code) = json(&["equiv", "--algebra", "r3", "--allow-swap", f, h]);
    assert_eq!(code, 0);
    assert_eq!(slicereg(&["equiv", "--allow-swap", F, G]).status.code(), Some(2));
}

#[test]
fn series_check_and_honest_failure() {
    let (v, code) = json(&["series-check"]);
    assert_eq!(code, 0);
    assert!(v["checks"].as_array().unwrap().len() >= 10);
    let (_, code) = json(&["series-check", "--tol", "1e-300"]);
    assert_eq!(code, 1);
    let (_, code) = json(&["series-check", "--samples", "0.1, 0.2+0.1E", "--order", "30"]);
    assert_eq!(code, 0);
    assert_eq!(slicereg(&["series-check", "--samples", "x"]).status.code(), Some(2));
}

#[test]
fn worked_examples_all_pass() {
    let o = slicereg(&["paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let (v, code) = json(&["paper-examples"]);
    assert_eq!(code, 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["equiv", "i + E", "i"],
        vec!["invariants", "z + q"],
        vec!["classify", "z"],
        vec!["invariants", "2z"],
        vec!["bogus"],
        vec!["intertwine", F, G],
    ] {
        let o = slicereg(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn cdiv_roots() {
    let o = slicereg(&["cdiv", "--roots", "z + i*z^2*(z - 1) + j*z^3*(z - 1)^2"]);
    let out = stdout(&o);
    assert!(out.contains("cdiv: -z^2 + z^3"));
    assert!(out.contains("multiplicity 2"));
    assert!(out.contains("multiplicity 1"));
}
