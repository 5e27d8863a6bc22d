use std::process::{Command, Output};

use serde_json::Value;
use strata_core::artin::GroupPresentation;

fn strata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(args)
        .env_remove("STRATA_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn table_json() {
    let o = strata(&["table", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 10);
    let r31 = records.iter().find(|r| r["partition"] == "(3,1)").unwrap();
    assert_eq!(r31["kodaira_type"], "II (add)");
    assert_eq!(r31["model"], "S(E7,C)");
    let r14 = &records[0];
    assert_eq!(
        (r14["dim_h"].as_u64(), r14["dim_ph"].as_u64()),
        (Some(9), Some(8))
    );
    assert!(v["dimension_checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|d| d["consistent"] == true));
}

#[test]
fn table_markdown_and_csv() {
    let md = stdout(&strata(&["table", "--format", "markdown"]));
    assert!(md.starts_with("| k | kind | Kodaira type |"));
    assert!(md.contains("| (4) | nonhyperelliptic | III (add) | E6 |"));
    let csv = stdout(&strata(&["table", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 11);
    assert!(csv
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("(1^4),nonhyperelliptic,smooth,E7,A7,9,8"));
}

#[test]
fn exceptional_listing() {
    let o = strata(&["exceptional", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 57);
    let v = json(&strata(&["exceptional", "--format", "json"]));
    let rows = v["exceptionals"].as_array().unwrap();
    assert_eq!(rows.len(), 56);
    assert_eq!(rows.iter().filter(|r| r["epsilon"] == 1).count(), 28);
}

#[test]
fn verify_single_claim_and_unknown() {
    let o = strata(&["verify", "--claim", "C1", "--no-cache"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("C1   PASS"));
    let o = strata(&["verify", "--claim", "C99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no such claim"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(strata(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        strata(&["table", "--format", "yaml"]).status.code(),
        Some(2)
    );
    assert_eq!(strata(&["present", "(5)"]).status.code(), Some(2));
    assert_eq!(
        strata(&["coxeter", "quasi-special", "F4~"]).status.code(),
        Some(2)
    );
}

#[test]
fn present_two_one_one() {
    let o = strata(&["present", "(2,1^2)", "--format", "json"]);
    assert!(o.status.success());
    let p = GroupPresentation::from_json(&stdout(&o)).unwrap();
    assert_eq!(p.generators.len(), 8);
    assert_eq!(p.relators.len(), 28 + 9);
    let text = stdout(&strata(&["present", "(2,1²)", "--style", "text"]));
    assert!(text.starts_with("group PH(2,1^2)"));
}

#[test]
fn present_two_two_forms() {
    let p =
        GroupPresentation::from_json(&stdout(&strata(&["present", "(2,2)", "--style", "json"])))
            .unwrap();
    assert_eq!(p.semidirect.as_ref().unwrap().elements.len(), 6);
    assert_eq!(p.relators.len(), 22);
    let v = GroupPresentation::from_json(&stdout(&strata(&[
        "present",
        "(2^2)",
        "--variant",
        "--style",
        "json",
    ])))
    .unwrap();
    assert_eq!(v.relators.len(), 24);
    let gap = stdout(&strata(&["present", "(2,2)", "--style", "gap-style"]));
    assert!(gap.contains("F := FreeGroup(\"t0\""));
    assert!(gap.trim_end().ends_with("G := F / rels;"));
}

#[test]
fn present_other_strata() {
    let o = strata(&["present", "(1^4)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no presentation"));
    let p =
        GroupPresentation::from_json(&stdout(&strata(&["present", "hyp(4)", "--format", "json"])))
            .unwrap();
    assert_eq!(p.generators.len(), 6);
    assert_eq!(p.extension.unwrap().text, "extension of μ_5 by B_7");
    let p = GroupPresentation::from_json(&stdout(&strata(&["present", "(4)", "--format", "json"])))
        .unwrap();
    assert_eq!(p.generators.len(), 6);
}

#[test]
fn coxeter_queries() {
    let v = json(&strata(&[
        "coxeter",
        "quasi-special",
        "E7~",
        "--format",
        "json",
    ]));
    assert_eq!(v["automorphism_group_order"], 2);
    let a7 = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["subdiagram_type"] == "A7")
        .unwrap();
    assert_eq!(a7["automorphism"], "(0 7)(1 6)(3 5)");
    let o = strata(&[
        "coxeter",
        "translation",
        "E6~",
        "0",
        "2",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["translation_reproduced"], true);
    assert_eq!(
        v["translation"],
        serde_json::json!(["1", "2", "2", "3", "2", "1"])
    );
    assert_eq!(
        strata(&["coxeter", "translation", "E6~", "0", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        strata(&["coxeter", "translation", "E6~", "0", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn degeneration_verify() {
    let o = strata(&["degeneration", "verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["specialize"]["specialize_true"], 56);
}

#[test]
fn cold_and_warm_cache_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = [
        "verify",
        "--claim",
        "C1",
        "--claim",
        "C9",
        "--format",
        "json",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];
    let cold = strata(&args);
    assert!(cold.status.success());
    assert!(std::fs::read_dir(&cache).unwrap().count() > 0);
    let warm = strata(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = strata(&[
        "verify",
        "--claim",
        "C1",
        "--claim",
        "C9",
        "--format",
        "json",
        "--no-cache",
    ]);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(["verify", "--claim", "C1"])
        .env("STRATA_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}
