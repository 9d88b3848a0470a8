//! Drives the compiled binary end to end: exit codes, stderr messages,
//! JSON shape and the golden outputs under `tests/fixtures/golden`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

fn params(name: &str) -> String {
    fixture(&format!("params/{name}.json"))
        .display()
        .to_string()
}

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-g7"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn all_ones_is_reducible_and_agrees() {
    let out = hecke(&["check", &params("all_ones")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let v = &doc["verdict"];
    assert_eq!(v["regime"], "equal_x");
    assert_eq!(v["theorem_decision"], "reducible");
    assert_eq!(v["oracle_decision"], "reducible");
    assert_eq!(v["agreement"], true);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(v["predicted_vector"]["is_invariant"], true);
}

#[test]
fn all_ones_matches_golden_json() {
    let out = hecke(&["check", &params("all_ones")]);
    let golden = std::fs::read_to_string(fixture("golden/check_all_ones.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn distinct_integer_parameters_are_irreducible() {
    let out = hecke(&["check", &params("irreducible")]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json(&out)["verdict"];
    assert_eq!(v["theorem_decision"], "irreducible");
    assert_eq!(v["oracle_decision"], "irreducible");
    assert!(v["witnesses"].as_array().is_none_or(|w| w.is_empty()));
}

#[test]
fn missing_parameter_is_an_input_error_naming_it() {
    let out = hecke(&["check", &params("missing_z2")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("z2"), "{}", stderr(&out));
}

#[test]
fn out_of_range_argument_is_rejected() {
    let out = hecke(&["check", &params("bad_argument")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("x1"), "{}", stderr(&out));
}

#[test]
fn unreadable_file_is_an_input_error() {
    let out = hecke(&["check", "/nonexistent/params.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_flags_are_input_errors() {
    for args in [
        &["--r-sign", "2", "check", "x.json"][..],
        &["--force-regime", "sideways", "check", "x.json"],
        &["--tolerance", "-1", "relations", "x.json"],
        &["--inject-reducible-rate", "1.5", "sweep"],
        &["--output", "yaml", "identities"],
        &["frobnicate"],
    ] {
        let out = hecke(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn help_exits_zero() {
    let out = hecke(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in ["check", "sweep", "identities", "relations"] {
        assert!(text.contains(sub), "help lists {sub}");
    }
}

#[test]
fn forcing_the_wrong_regime_still_runs() {
    let out = hecke(&["--force-regime", "distinct", "check", &params("all_ones")]);
    let code = out.status.code();
    assert!(code == Some(0) || code == Some(2), "{}", stderr(&out));
    assert_eq!(json(&out)["verdict"]["regime"], "distinct_x");
}

#[test]
fn single_identity_report() {
    let out = hecke(&["identities", "--only", "w-factorization"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out)["reports"].as_array().unwrap().clone();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["name"], "w-factorization");
    assert_eq!(reports[0]["status"], "verified");
}

#[test]
fn unknown_identity_is_an_input_error() {
    let out = hecke(&["identities", "--only", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no-such-identity"));
}

#[test]
fn full_identity_run_reports_the_conjugation_failure() {
    let out = hecke(&["identities"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 8);
    let status = |name: &str| {
        reports.iter().find(|r| r["name"] == name).unwrap()["status"]
            .as_str()
            .unwrap()
            .to_owned()
    };
    assert_eq!(status("conjugation-formulas"), "failed");
    assert_eq!(status("conjugation-s2-corrected"), "verified");
    assert_eq!(status("b-vanishes"), "sign-dependent");
}

#[test]
fn identities_text_matches_golden() {
    let out = hecke(&["--output", "text", "identities"]);
    let golden = std::fs::read_to_string(fixture("golden/identities.txt")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn relations_with_cubic_parameters_hold_on_both_branches() {
    for sign in ["+1", "-1"] {
        let out = hecke(&["--r-sign", sign, "relations", &params("cubic")]);
        assert_eq!(out.status.code(), Some(0), "{sign}: {}", stderr(&out));
        let doc = json(&out);
        assert_eq!(doc["all_below_tolerance"], true);
        let h = &doc["hecke_residuals"];
        for key in [
            "s1_quadratic",
            "s2_quadratic",
            "s3_quadratic",
            "s2_cubic",
            "s3_cubic",
        ] {
            assert!(h[key].as_f64().unwrap() < 1e-9, "{sign} {key}");
        }
        assert!(doc["braid_residual"].as_f64().unwrap() < 1e-9);
    }
}

#[test]
fn impossible_tolerance_makes_relations_fail() {
    let out = hecke(&["--tolerance", "1e-20", "relations", &params("cubic")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["all_below_tolerance"], false);
}

#[test]
fn every_json_document_carries_schema_version() {
    let docs = [
        hecke(&["check", &params("irreducible")]),
        hecke(&["relations", &params("irreducible")]),
        hecke(&["identities", "--only", "discriminant-factorization"]),
        hecke(&["--samples", "50", "sweep"]),
    ];
    for out in &docs {
        assert_eq!(json(out)["schema_version"], 1);
    }
}

#[test]
fn text_output_is_not_json() {
    let out = hecke(&["--output", "text", "check", &params("all_ones")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_err());
    assert!(String::from_utf8_lossy(&out.stdout).contains("agreement"));
}

#[test]
fn sweep_is_deterministic_across_processes() {
    let args = [
        "--seed",
        "7",
        "--samples",
        "500",
        "--domain",
        "unit-modulus",
        "sweep",
    ];
    let a = hecke(&args);
    let b = hecke(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let c = hecke(&[
        "--seed",
        "8",
        "--samples",
        "500",
        "--domain",
        "unit-modulus",
        "sweep",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sweep_writes_replayable_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = hecke(&[
        "--seed",
        "2024",
        "--samples",
        "400",
        "--domain",
        "general-complex",
        "sweep",
        "--fixtures-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let summary = json(&out);
    let listed = summary["disagreements"].as_array().unwrap().len();
    let written: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert!(listed > 0);
    assert_eq!(written.len(), listed);
    for entry in written {
        let path = entry.unwrap().path();
        let fixture: Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(fixture["schema_version"], 1);
        assert_eq!(fixture["outcome"], "disagree_resolved_by_branch");
        let replay = hecke(&["check", path.to_str().unwrap()]);
        assert_eq!(
            replay.status.code(),
            Some(1),
            "fixture is not a bare parameter file"
        );
    }
}

#[test]
fn sweep_output_ignores_thread_count() {
    let args = [
        "--seed",
        "11",
        "--samples",
        "400",
        "--domain",
        "general-complex",
        "sweep",
    ];
    let single = Command::new(env!("CARGO_BIN_EXE_hecke-g7"))
        .env("RAYON_NUM_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(single.stdout, hecke(&args).stdout);
}
