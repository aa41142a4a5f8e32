use std::process::{Command, Output};

use serde_json::Value;

fn lielab(args: &[&str], seed_env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lielab"));
    cmd.args(args).env_remove("LIELAB_SEED");
    if let Some(s) = seed_env {
        cmd.env("LIELAB_SEED", s);
    }
    cmd.output().expect("run lielab")
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/verification-run.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(doc: &Value) {
    let v = schema();
    let errors: Vec<String> = v
        .iter_errors(doc)
        .map(|e| format!("{e} at {}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:#?}");
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn list_prints_ids_in_run_order() {
    let out = lielab(&["list"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<&str> = text.lines().collect();
    assert_eq!(ids.len(), 12);
    assert_eq!(ids[0], "constructions");
    assert_eq!(ids[11], "engel-isotropic");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lielab(&["verify", "no-such-lemma"], None).status.code(), Some(2));
    assert_eq!(
        lielab(&["verify", "dim-scan", "--max-n", "2"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        lielab(&["verify", "dim-scan", "--format", "yaml"], None).status.code(),
        Some(2)
    );
    assert_eq!(lielab(&["verify"], None).status.code(), Some(2));
}

#[test]
fn json_is_schema_valid_ordered_and_reproducible() {
    let args = [
        "verify",
        "dim-scan",
        "umax-semidirect",
        "root-embeddings",
        "--max-n",
        "3",
        "--format",
        "json",
    ];
    let a = lielab(&args, None);
    let b = lielab(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_valid(&doc);
    let ids: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lemma_id"].as_str().unwrap())
        .collect();
    // fixed run order regardless of the order asked for
    assert_eq!(ids, ["umax-semidirect", "root-embeddings", "dim-scan"]);
    assert!(doc["reports"][0].get("timing_seconds").is_none());
}

#[test]
fn timing_is_opt_in() {
    let out = lielab(
        &[
            "verify",
            "umax-semidirect",
            "--max-n",
            "3",
            "--format",
            "json",
            "--with-timing",
        ],
        None,
    );
    let doc = json(&out);
    assert_valid(&doc);
    assert!(doc["reports"][0]["timing_seconds"].as_f64().is_some());
}

#[test]
fn failing_check_exits_1_with_counterexamples() {
    let out = lielab(&["verify", "sl2-identity", "--max-n", "3", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_valid(&doc);
    assert_eq!(doc["status"], "fail");
    let r = &doc["reports"][0];
    assert_eq!(r["status"], "fail");
    assert!(!r["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn seed_comes_from_the_environment() {
    let args = ["verify", "h0-irreducibility", "--max-n", "4", "--format", "json"];
    let doc = json(&lielab(&args, Some("42")));
    assert_eq!(doc["seed"], 42);
    assert_eq!(doc["reports"][0]["params"]["seed"], 42);
    let flag = json(&lielab(
        &[
            "verify",
            "h0-irreducibility",
            "--max-n",
            "4",
            "--format",
            "json",
            "--seed",
            "5",
        ],
        Some("42"),
    ));
    assert_eq!(flag["seed"], 5);
}

#[test]
fn text_lines_follow_the_format() {
    let out = lielab(&["verify", "umax-semidirect", "dim-scan", "--max-n", "3"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("umax-semidirect [max_n=3] PASS ("), "{}", lines[0]);
    assert!(
        lines[1].starts_with("dim-scan [bound=30 max_n=3] PASS ("),
        "{}",
        lines[1]
    );
    assert!(lines.iter().all(|l| l.ends_with("s)")));
}
