//! End-to-end tests of the binary: exit-code contract, certificate output,
//! cache behavior, and idempotence.

use std::path::PathBuf;
use std::process::{Command, Output};

fn triadic() -> Command {
    Command::new(env!("CARGO_BIN_EXE_triadic"))
}

fn run(args: &[&str]) -> Output {
    triadic().args(args).output().expect("binary runs")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("triadic-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn expand_exit_codes_and_values() {
    let out = run(&["expand", "--func", "ph3", "--terms", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "0\t1");
    assert_eq!(rows[1], "1\t2");
    assert_eq!(rows[2], "2\t4");

    let out = run(&["expand", "--func", "psi", "--terms", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), vec!["0\t1", "1\t1", "2\t0", "3\t1"]);

    let out = run(&["expand", "--func", "nosuch", "--terms", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_json_schema() {
    let out = run(&["expand", "--func", "zeta", "--terms", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valuation"], 1);
    assert!(v["coeffs"].as_array().unwrap().iter().all(|c| c.is_string()));
    assert_eq!(v["coeffs"][0], "1");
}

#[test]
fn table_command_and_cache() {
    let dir = temp_dir("table");
    let cache = dir.to_str().unwrap();
    let out = run(&["table", "xi", "--max-i", "12", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let path = dir.join("table-xi-12.json");
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["side"], "xi");
    assert_eq!(v["rows"][1]["coeffs"], serde_json::json!(["0", "1", "-3", "3"]));

    // the zeta payload must be identical rows
    let out = run(&["table", "zeta", "--max-i", "12", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(0));
    let vz: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("table-zeta-12.json")).unwrap())
            .unwrap();
    assert_eq!(v["rows"], vz["rows"]);

    // too-small table is a usage error
    let out = run(&["table", "xi", "--max-i", "2", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(2));

    // a corrupted cache is discarded and rebuilt
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["table", "xi", "--max-i", "12", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(0));
    let v2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"], v2["rows"]);
}

#[test]
fn verify_congruence_exit_codes() {
    let dir = temp_dir("congruence");
    let cache = dir.to_str().unwrap();
    let ok = run(&[
        "verify",
        "congruence",
        "--family",
        "ph3",
        "--m",
        "1",
        "--n-max",
        "60",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(ok.status.code(), Some(0), "{:?}", ok);

    // over-strong modulus: counterexample expected, exit 1, witness printed
    let fail = run(&[
        "verify",
        "congruence",
        "--family",
        "ph3",
        "--m",
        "1",
        "--n-max",
        "60",
        "--modulus-extra",
        "5",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8(fail.stdout).unwrap();
    assert!(text.contains("witness"), "{text}");

    // horizon violation: m too large for the cap, exit 3
    let horizon = run(&[
        "verify",
        "congruence",
        "--family",
        "ph3",
        "--m",
        "6",
        "--n-max",
        "200",
        "--cache-dir",
        cache,
    ]);
    assert_eq!(horizon.status.code(), Some(3), "{:?}", horizon);
}

#[test]
fn verify_modeq_idempotent_with_warm_cache() {
    let dir = temp_dir("idem");
    let cache = dir.to_str().unwrap();
    let strip = |bytes: &[u8]| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        for cert in v.as_array_mut().unwrap() {
            let obj = cert.as_object_mut().unwrap();
            obj.remove("timestamp");
            obj.remove("elapsed_ms");
        }
        v
    };
    let first = run(&["verify", "modeq", "--format", "json", "--cache-dir", cache]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["verify", "modeq", "--format", "json", "--cache-dir", cache]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(strip(&first.stdout), strip(&second.stdout));
}

#[test]
fn certify_requires_out_and_writes_certificates() {
    let dir = temp_dir("certify");
    let cache = dir.to_str().unwrap();
    let missing = run(&["certify", "newton", "--cache-dir", cache]);
    assert_eq!(missing.status.code(), Some(2));

    let out_path = dir.join("certs.json");
    let ok = run(&[
        "certify",
        "newton",
        "--cache-dir",
        cache,
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "{:?}", ok);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let certs = v.as_array().unwrap();
    assert!(!certs.is_empty());
    for cert in certs {
        assert_eq!(cert["status"], "pass");
        assert!(cert["claim_id"].is_string());
        assert!(cert["tool_version"].is_string());
        // every series-identity certificate carries its horizon caveat
        if cert["claim_id"].as_str().unwrap().contains("newton") {
            assert!(cert["horizon_note"].is_string());
        }
    }
}

#[test]
fn verify_pod_and_problem() {
    let dir = temp_dir("podprob");
    let cache = dir.to_str().unwrap();
    let out = run(&["verify", "pod", "--n-max", "200", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    let out = run(&["verify", "problem", "--max-m", "2", "--cache-dir", cache]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["verify", "nosuchsuite"]);
    assert_eq!(out.status.code(), Some(2));
}
