//! End-to-end checks of the `wlab` binary: catalog listing, batch
//! verification, single-instance runs, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn wlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlab"))
        .args(args)
        .env_remove("WEIHRAUCH_LAB_BUDGET")
        .output()
        .expect("wlab runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("wlab-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const LPO_FIRST_ZERO_3: &str = r#"{
  "problem": { "name": "lpo" },
  "payload": {
    "kind": "oracle",
    "oracle": {
      "descriptor": {
        "kind": "finite_support",
        "entries": [[3, 0]],
        "default": 1,
        "support_bound": 4
      },
      "fuel": 4096
    }
  },
  "certificate": { "kind": "first_zero", "index": 3 }
}"#;

const WF_NO_CERTIFICATE: &str = r#"{
  "problem": { "name": "wf" },
  "payload": {
    "kind": "tree",
    "tree": {
      "branching": "omega",
      "node_fn": {
        "descriptor": { "kind": "periodic", "prefix": [], "cycle": [1] },
        "fuel": 4096
      }
    }
  }
}"#;

#[test]
fn list_covers_the_catalog() {
    let out = wlab(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("red_wkl_to_hat_llpo (Lemma BGP)"), "{text}");
    for problem in [
        "LPO", "LLPO", "LG_k", "GC_k", "TC_k", "WKL", "WKL_n", "WF", "S", "S_L", "S_vecL", "S_F",
        "RC", "D",
    ] {
        assert!(
            text.contains(&format!("  {problem}\n")),
            "missing {problem}"
        );
    }

    let out = wlab(&["list", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["problems"].as_array().unwrap().len(), 14);
    assert!(doc["reductions"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["name"] == "red_wkl_to_hat_llpo" && r["anchor"] == "Lemma BGP"));
}

#[test]
fn verify_passes_on_a_sound_reduction() {
    let out = wlab(&[
        "verify",
        "--reduction",
        "lpo_to_lg",
        "--k",
        "2",
        "--count",
        "500",
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("500 valid"));
}

#[test]
fn verify_rejects_unknown_names() {
    let out = wlab(&["verify", "--reduction", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wlab(&["verify", "--reduction", "lpo_to_lg", "--family", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // --n on a --k reduction is a usage error too.
    let out = wlab(&["verify", "--reduction", "lpo_to_lg", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_emits_report_json() {
    let out = wlab(&[
        "verify",
        "--reduction",
        "wf_to_d",
        "--count",
        "20",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["cases"], 20);
    assert_eq!(doc["invalid"], 0);
    assert_eq!(doc["seed"], 7);
}

#[test]
fn solve_prints_the_certified_answer() {
    let path = write_temp("lpo.json", LPO_FIRST_ZERO_3);
    let out = wlab(&["solve", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("4"));
}

#[test]
fn run_pushes_an_instance_through_a_reduction() {
    let path = write_temp("lpo-run.json", LPO_FIRST_ZERO_3);
    let out = wlab(&[
        "run",
        "--reduction",
        "lpo_to_lg",
        "--k",
        "2",
        "--instance",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("target solution: 5"), "{text}");
    assert!(text.contains("back: 4"), "{text}");
}

#[test]
fn certificate_free_claims_stay_unknown() {
    let path = write_temp("wf.json", WF_NO_CERTIFICATE);
    let out = wlab(&["solve", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_files_are_usage_errors() {
    let path = write_temp(
        "bad.json",
        "{\"problem\": {\"name\": \"lpo\"}, \"extra\": 1}",
    );
    let out = wlab(&["solve", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = wlab(&["solve", "--instance", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_environment_variable_is_honored() {
    let path = write_temp("lpo-budget.json", LPO_FIRST_ZERO_3);
    let out = Command::new(env!("CARGO_BIN_EXE_wlab"))
        .args(["solve", "--instance", path.to_str().unwrap()])
        .env("WEIHRAUCH_LAB_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_wlab"))
        .args(["solve", "--instance", path.to_str().unwrap()])
        .env("WEIHRAUCH_LAB_BUDGET", "8192")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
