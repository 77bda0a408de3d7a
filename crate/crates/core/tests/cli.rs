use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(rel)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_enritch"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, text)
}

#[test]
fn quantale_check_exit_codes() {
    for (file, code) in [("boolean.json", 0), ("lukasiewicz3.json", 0), ("mutated.json", 1)] {
        let (c, report, _) = run(&["quantale", "check", &data(&format!("quantales/{file}"))]);
        assert_eq!(c, code, "{file}");
        assert_eq!(report["command"], "quantale check");
        assert_eq!(report["inputs"].as_array().unwrap().len(), 1);
    }
    let (_, report, _) = run(&["quantale", "check", &data("quantales/mutated.json")]);
    assert_eq!(report["witnesses"][0]["law"], "unit");
}

#[test]
fn schema_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"elements\": [\"0\"], \"leq\": 3}").unwrap();
    let (c, report, _) = run(&["quantale", "check", bad.to_str().unwrap()]);
    assert_eq!(c, 2);
    assert_eq!(report["result"]["kind"], "schema");
    let (c, _, _) = run(&["quantale", "check", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(c, 2);
    let (c, _, _) = run(&["verify", "t99", "--quantale", "boolean", "--bound", "1"]);
    assert_eq!(c, 2);
}

#[test]
fn tighten_writes_a_tight_function() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let space = data("spaces/two-point.json");
    let (c, report, _) = run(&[
        "hull",
        "tighten",
        "--space",
        &space,
        "--radius",
        &data("spaces/radius-3-3.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    assert_eq!(report["result"]["tightened"]["values"]["a"], "1");
    assert_eq!(report["result"]["tightened"]["values"]["b"], "3");
    let (c, _, _) = run(&["hull", "member", "--space", &space, "--radius", out.to_str().unwrap()]);
    assert_eq!(c, 0);

    let (_, report, _) = run(&[
        "hull",
        "tighten",
        "--space",
        &space,
        "--radius",
        &data("spaces/radius-3-3.json"),
        "--order",
        "b,a",
    ]);
    assert_eq!(report["result"]["tightened"]["values"]["a"], "3");
    assert_eq!(report["result"]["tightened"]["values"]["b"], "1");
}

#[test]
fn member_reports_failing_point() {
    let (c, report, _) = run(&[
        "hull",
        "member",
        "--space",
        &data("spaces/two-point.json"),
        "--radius",
        &data("spaces/radius-2-3.json"),
    ]);
    assert_eq!(c, 1);
    assert_eq!(report["witnesses"]["point"], "a");
}

#[test]
fn non_ambient_tighten_is_a_precondition_error() {
    let (c, _, _) = run(&[
        "hull",
        "tighten",
        "--space",
        &data("spaces/discrete-pair.json"),
        "--radius",
        &data("spaces/radius-1-3.json"),
    ]);
    assert_eq!(c, 3);
}

#[test]
fn sigma_and_dense() {
    let (c, report, _) = run(&[
        "hull",
        "sigma",
        "--space",
        &data("spaces/two-point.json"),
        "--mu",
        &data("spaces/radius-1-3.json"),
        "--lambda",
        &data("spaces/radius-3-1.json"),
    ]);
    assert_eq!(c, 0);
    assert_eq!(report["result"]["sigma"], "2");
    let (c, _, _) = run(&[
        "hull",
        "dense",
        "--domain",
        &data("spaces/two-point.json"),
        "--codomain",
        &data("spaces/two-point-midpoint.json"),
        "--map",
        &data("spaces/map-identity-pair.json"),
    ]);
    assert_eq!(c, 0);
    let (c, report, _) = run(&[
        "hull",
        "dense",
        "--domain",
        &data("spaces/one-point.json"),
        "--codomain",
        &data("spaces/discrete-pair.json"),
        "--map",
        &data("spaces/map-a.json"),
    ]);
    assert_eq!(c, 1);
    assert_eq!(report["witnesses"]["y"], "b");
}

#[test]
fn hyperfamily_outcomes() {
    let balls = data("spaces/family-balls.json");
    let (c, _, _) = run(&["hull", "hyperfamily", "--space", &data("spaces/two-point.json"), "--family", &balls]);
    assert_eq!(c, 1);
    let (c, report, _) = run(&[
        "hull",
        "hyperfamily",
        "--space",
        &data("spaces/two-point-midpoint.json"),
        "--family",
        &balls,
        "--strict-typing",
    ]);
    assert_eq!(c, 0);
    assert_eq!(report["witnesses"]["point"], "m");
    let (c, report, _) = run(&[
        "hull",
        "hyperfamily",
        "--space",
        &data("spaces/two-point.json"),
        "--family",
        &data("spaces/family-far.json"),
    ]);
    assert_eq!(c, 3);
    assert_eq!(report["witnesses"]["pair"], serde_json::json!(["a", "b"]));
}

#[test]
fn verify_examples() {
    let (c, report, _) = run(&["verify", "t36", "--quantale", &data("quantales/boolean.json"), "--bound", "3"]);
    assert_eq!(c, 0);
    assert_eq!(report["result"]["categories"], 23);
    let (c, _, _) = run(&["verify", "l43", "--quantale", &data("quantales/lukasiewicz3.json"), "--bound", "2"]);
    assert_eq!(c, 0);
    let (c, _, _) = run(&["verify", "t54", "--quantale", "boolean", "--bound", "2", "--strict-typing"]);
    assert_eq!(c, 0);
    let (c, report, _) = run(&["verify", "t44", "--quantale", "boolean", "--bound", "9"]);
    assert_eq!(c, 4);
    assert_eq!(report["result"]["kind"], "bound");
    let (c, _, _) = run(&["verify", "t44", "--quantale", &data("quantales/mutated.json"), "--bound", "1"]);
    assert_eq!(c, 3);
}

#[test]
fn reports_are_byte_stable_across_workers() {
    let args = ["verify", "t54", "--quantale", "lukasiewicz3", "--bound", "2"];
    let (_, _, one) = run_env(&args, &[("ENRITCH_WORKERS", "1")]);
    let (_, _, three) = run_env(&args, &[("ENRITCH_WORKERS", "3")]);
    assert_eq!(one, three);
    let (_, _, again) = run_env(&args, &[("ENRITCH_WORKERS", "1")]);
    assert_eq!(one, again);
    let (c, _, _) = run_env(&args, &[("ENRITCH_WORKERS", "zero")]);
    assert_eq!(c, 2);
}

#[test]
fn timing_only_on_request() {
    let args = ["verify", "l43", "--quantale", "boolean", "--bound", "1"];
    let (_, report, _) = run(&args);
    assert!(report.get("timing_ms").is_none());
    let mut timed = args.to_vec();
    timed.push("--timing");
    let (_, report, _) = run(&timed);
    assert!(report["timing_ms"].is_u64());
}
