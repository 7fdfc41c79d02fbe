use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fdalg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdalg"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(dir: &Path, args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = fdalg(dir, &full);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn fixtures() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["examples", "liu-schulz", "--q", "2"],
        vec!["examples", "kx2-twist", "--t", "3"],
        vec!["examples", "kx2-twist", "--t", "-1"],
        vec!["examples", "truncated-poly", "--n", "3"],
        vec!["examples", "a2"],
        vec!["examples", "exterior"],
    ] {
        let out = fdalg(dir.path(), &args);
        assert!(out.status.success(), "{args:?}");
    }
    dir
}

#[test]
fn examples_write_expected_files() {
    let dir = fixtures();
    for f in [
        "lambda_q.json",
        "lambda_q_module.json",
        "kx2.json",
        "kx2_sigma_3.json",
        "kx2_sigma_m1.json",
        "kx3.json",
        "kx3_simple.json",
        "a2.json",
        "exterior.json",
    ] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let r = json(dir.path(), &["algebra", "check", "--file", "lambda_q.json"]);
    assert_eq!(r["result"]["dim"], 4);
}

#[test]
fn liu_schulz_period_search_exhausts_the_horizon() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["module", "period", "--algebra", "lambda_q.json", "--q", "2", "--gen", "x+y", "--horizon", "20"],
    );
    assert_eq!(r["result"]["outcome"], "HorizonExhausted");
    assert_eq!(r["result"]["distinct"], 21);
    // the same module from its file
    let r = json(
        dir.path(),
        &["module", "period", "--algebra", "lambda_q.json", "--module", "lambda_q_module.json", "--horizon", "10"],
    );
    assert_eq!(r["result"]["outcome"], "HorizonExhausted");
}

#[test]
fn root_of_unity_parameters_are_periodic() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["--field", "Fp:7", "module", "period", "--algebra", "lambda_q.json", "--gen", "x+y"],
    );
    assert_eq!(r["result"]["period"], 3);
    let r = json(
        dir.path(),
        &["module", "period", "--algebra", "lambda_q.json", "--q", "-1", "--gen", "x+y"],
    );
    assert_eq!(r["result"]["period"], 2);
}

#[test]
fn algebra_check_reports_self_injectivity() {
    let dir = fixtures();
    let r = json(dir.path(), &["algebra", "check", "--file", "kx2.json"]);
    assert_eq!(r["result"]["self_injective"], true);
    assert_eq!(r["result"]["basic"], true);
    let r = json(dir.path(), &["algebra", "check", "--file", "a2.json"]);
    assert_eq!(r["result"]["self_injective"], false);
    let r = json(dir.path(), &["algebra", "center", "--file", "lambda_q.json"]);
    assert_eq!(r["result"]["basis"], serde_json::json!(["e", "xy"]));
    let r = json(dir.path(), &["algebra", "radical", "--file", "kx3.json"]);
    assert_eq!(r["result"]["power_dims"], serde_json::json!([2, 1, 0]));
}

#[test]
fn bimodule_syzygy_recognizes_the_sign_twist() {
    let dir = fixtures();
    let r = json(dir.path(), &["bimodule", "syzygy", "--algebra", "kx2.json", "-n", "1", "--recognize-twist"]);
    assert_eq!(r["result"]["twist"], serde_json::json!(["e -> e", "x -> -x"]));
    let out = fdalg(dir.path(), &["bimodule", "syzygy", "--algebra", "kx2.json", "-n", "1", "--recognize-twist"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("σ: e -> e, x -> -x"));
}

#[test]
fn twist_orders() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["bimodule", "twist-order", "--algebra", "kx2.json", "--automorphism", "kx2_sigma_m1.json"],
    );
    assert_eq!(r["result"]["out_order"], 2);
    let r = json(
        dir.path(),
        &["bimodule", "twist-order", "--algebra", "kx2.json", "--automorphism", "kx2_sigma_3.json", "--bound", "6"],
    );
    assert_eq!(r["result"]["out_order"], Value::Null);
    assert_eq!(r["result"]["inner"], false);
}

#[test]
fn stable_check_and_regular_degeneration() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["bimodule", "stable-check", "--algebra", "kx2.json", "--x", "syzygy:1", "--y", "cosyzygy:1"],
    );
    assert_eq!(r["result"]["passed"], true);
    let r = json(
        dir.path(),
        &["orbit", "regular-degeneration", "--algebra", "kx2.json", "--candidate", "twist:kx2_sigma_3.json"],
    );
    assert_eq!(r["result"]["conclusion"], "NotProperDegeneration");
    let r = json(dir.path(), &["orbit", "regular-degeneration", "--algebra", "kx2.json", "--candidate", "regular"]);
    assert_eq!(r["result"]["conclusion"], "Improper");
}

#[test]
fn module_commands() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["module", "iso", "--algebra", "kx3.json", "--module", "simple:0,regular", "--other", "regular,kx3_simple.json"],
    );
    assert_eq!(r["result"]["isomorphic"], true);
    let r = json(
        dir.path(),
        &["module", "ext", "--algebra", "kx3.json", "--module", "simple:0", "--other", "simple:0", "-n", "2"],
    );
    assert_eq!(r["result"]["ext_dim"], 1);
    assert_eq!(r["result"]["stable_hom_dim"], 1);
    let r = json(dir.path(), &["module", "strip", "--algebra", "kx3.json", "--module", "simple:0,regular,regular"]);
    assert_eq!(r["result"]["core_dim"], 1);
    assert_eq!(r["result"]["projective_multiplicities"], serde_json::json!([2]));
    let r = json(dir.path(), &["orbit", "stats", "--algebra", "kx3.json", "--module", "simple:0"]);
    assert_eq!(r["result"]["certificate"], "OpenSimpleBasic");
    let r = json(
        dir.path(),
        &["orbit", "degeneration", "--algebra", "kx2.json", "--module", "simple:0,simple:0", "--other", "regular"],
    );
    assert_eq!(r["result"]["obstruction"]["label"], "S0");
}

#[test]
fn resolve_outputs() {
    let dir = fixtures();
    let r = json(
        dir.path(),
        &["module", "resolve", "--algebra", "exterior.json", "--module", "simple:0", "--horizon", "9"],
    );
    assert_eq!(r["result"]["projective_dims"][3], 16);
    assert_eq!(r["result"]["complexity"]["kind"], "PolynomialDegree");
    let out = fdalg(
        dir.path(),
        &["--csv", "module", "resolve", "--algebra", "kx2.json", "--module", "simple:0", "--horizon", "2"],
    );
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "t,projective_dim,syzygy_dim\n0,2,1\n1,2,1\n2,2,1\n"
    );
}

#[test]
fn reports_are_deterministic() {
    let dir = fixtures();
    let args = ["module", "period", "--algebra", "lambda_q.json", "--gen", "x+y", "--horizon", "6", "--seed", "42"];
    let a = json(dir.path(), &args);
    let b = json(dir.path(), &args);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    assert_eq!(a["seed"], 42);
    let c = json(dir.path(), &["module", "period", "--algebra", "lambda_q.json", "--gen", "x+y", "--horizon", "6", "--seed", "43"]);
    assert_ne!(a["inputs_digest"], c["inputs_digest"]);
    assert_eq!(
        serde_json::to_string(&a["result"]).unwrap(),
        serde_json::to_string(&c["result"]).unwrap()
    );
}

#[test]
fn exit_codes() {
    let dir = fixtures();
    // domain error
    let out = fdalg(dir.path(), &["module", "period", "--algebra", "a2.json", "--module", "simple:0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not self-injective"));
    // usage errors
    assert_eq!(fdalg(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(fdalg(dir.path(), &["examples", "nope"]).status.code(), Some(2));
    assert_eq!(fdalg(dir.path(), &["algebra", "check", "--file", "missing.json"]).status.code(), Some(2));
    assert_eq!(fdalg(dir.path(), &["--horizon", "0", "algebra", "check", "--file", "kx2.json"]).status.code(), Some(2));
    fs::write(dir.path().join("broken.json"), "{\"quiver\": [").unwrap();
    let out = fdalg(dir.path(), &["algebra", "check", "--file", "broken.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    // validation error in a well-formed file
    fs::write(
        dir.path().join("bad_arrow.json"),
        r#"{"quiver": {"vertices": ["e"], "arrows": [{"name": "x", "source": "e", "target": "e"}],
            "relations": [[{"path": ["z"], "coeff": "1"}]], "nilpotency": 2}}"#,
    )
    .unwrap();
    assert_eq!(fdalg(dir.path(), &["algebra", "check", "--file", "bad_arrow.json"]).status.code(), Some(1));
    assert_eq!(fdalg(dir.path(), &["--help"]).status.code(), Some(0));
}
