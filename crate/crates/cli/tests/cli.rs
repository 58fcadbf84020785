//! End-to-end tests of the command-line surface: exit codes, output
//! stability, and JSON schema conformance.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_garside-kit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    std::fs::read_to_string(p).expect("fixture exists")
}

fn schema(name: &str) -> serde_json::Value {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop();
    p.pop();
    p.push("schema");
    p.push(name);
    serde_json::from_str(&std::fs::read_to_string(p).expect("schema exists")).unwrap()
}

/// Minimal JSON Schema checker covering the subset the shipped schemas use:
/// type, required, properties, additionalProperties, items, minItems,
/// maxItems, enum, minimum.
fn validate(schema: &serde_json::Value, value: &serde_json::Value, path: &str) -> Result<(), String> {
    use serde_json::Value;
    if let Some(types) = schema.get("type") {
        let ok = match types.as_str().unwrap() {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return Err(format!("unknown type `{other}` in schema")),
        };
        if !ok {
            return Err(format!("{path}: expected {types}"));
        }
    }
    if let Some(allowed) = schema.get("enum") {
        if !allowed.as_array().unwrap().contains(value) {
            return Err(format!("{path}: {value} not in {allowed}"));
        }
    }
    if let Some(min) = schema.get("minimum") {
        let v = value.as_f64().ok_or_else(|| format!("{path}: not a number"))?;
        if v < min.as_f64().unwrap() {
            return Err(format!("{path}: {v} below minimum"));
        }
    }
    if let Value::Object(obj) = value {
        if let Some(req) = schema.get("required") {
            for key in req.as_array().unwrap() {
                if !obj.contains_key(key.as_str().unwrap()) {
                    return Err(format!("{path}: missing required {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(|p| p.as_object());
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in obj.keys() {
                if props.is_none_or(|p| !p.contains_key(key)) {
                    return Err(format!("{path}: unexpected property {key}"));
                }
            }
        }
        if let Some(props) = props {
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    validate(sub, v, &format!("{path}.{key}"))?;
                }
            }
        }
    }
    if let Value::Array(items) = value {
        if let Some(min) = schema.get("minItems") {
            if items.len() < min.as_u64().unwrap() as usize {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = schema.get("maxItems") {
            if items.len() > max.as_u64().unwrap() as usize {
                return Err(format!("{path}: more than {max} items"));
            }
        }
        if let Some(sub) = schema.get("items") {
            for (i, item) in items.iter().enumerate() {
                validate(sub, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn family_json_matches_schema_and_round_trips() {
    let out = run(&["family", "--kind", "mn", "--n", "3", "--emit", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    validate(&schema("presentation.schema.json"), &doc, "$").unwrap();

    // Round-trip the document through --presentation.
    let tmp = std::env::temp_dir().join(format!("garside-kit-test-{}.json", std::process::id()));
    std::fs::write(&tmp, stdout(&out)).unwrap();
    let out2 = run(&[
        "oracle",
        "equal",
        "--presentation",
        tmp.to_str().unwrap(),
        "--u",
        "1 3 1",
        "--v",
        "2 3",
    ]);
    assert!(out2.status.success(), "{}", stdout(&out2));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn lattice_dot_matches_committed_fixture() {
    let out = run(&["lattice", "mn", "--n", "2", "--format", "dot"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), fixture("m2_lattice.dot"));
}

#[test]
fn lattice_json_matches_schema() {
    let out = run(&["lattice", "--monoid", "mn:3", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    validate(&schema("lattice.schema.json"), &doc, "$").unwrap();
    assert_eq!(doc["simples"].as_array().unwrap().len(), 21);
}

#[test]
fn verify_cube_exit_codes() {
    let pass = run(&["verify", "cube", "--family", "mnp", "--n", "4", "--variant", "sharp"]);
    assert_eq!(pass.status.code(), Some(0), "{}", stdout(&pass));
    let fail = run(&["verify", "cube", "--family", "mn", "--n", "3", "--variant", "sharp"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("FAIL"));
}

#[test]
fn verify_garside_passes_for_small_ranks() {
    let out = run(&["verify", "garside", "--family", "mn", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn order_and_overflow_exit_codes() {
    let out = run(&["order", "--family", "mn", "--n", "3", "--add-relator", "r1^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "order 48");
    // Without the extra relator the group is infinite: overflow, exit 2.
    let out = run(&["order", "--family", "mn", "--n", "3", "--max-cosets", "500"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("OVERFLOW"));
}

#[test]
fn oracle_exit_codes() {
    let eq = run(&["oracle", "equal", "--family", "mn", "--n", "2", "--u", "1 2 1", "--v", "2 2"]);
    assert_eq!(eq.status.code(), Some(0));
    let ne = run(&["oracle", "equal", "--family", "mn", "--n", "2", "--u", "1", "--v", "2"]);
    assert_eq!(ne.status.code(), Some(1));
    let div = run(&["oracle", "divides", "--family", "mn", "--n", "3", "--u", "1", "--v", "3 3"]);
    assert_eq!(div.status.code(), Some(0));
    assert!(stdout(&div).contains("witness"));
}

#[test]
fn cap_environment_variable_turns_answers_inconclusive() {
    let out = bin()
        .args(["oracle", "equal", "--family", "mn", "--n", "3", "--u", "3 3 3 3", "--v", "1 3 1 3 1 3"])
        .env("GARSIDE_KIT_MAX_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_is_clean_on_the_braid_quotient() {
    let out = run(&["scan", "cancellativity", "--family", "hn", "--n", "3", "--max-lambda", "8"]);
    assert_eq!(out.status.code(), Some(0));
    // And flags the standard non-cancellative example.
    let tmp = std::env::temp_dir().join(format!("garside-kit-scan-{}.json", std::process::id()));
    std::fs::write(
        &tmp,
        r#"{"generators":[{"name":"a"},{"name":"b"}],"relations":[{"lhs":[1,2],"rhs":[2,2]}]}"#,
    )
    .unwrap();
    let out = run(&[
        "scan",
        "cancellativity",
        "--presentation",
        tmp.to_str().unwrap(),
        "--max-lambda",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("COUNTEREXAMPLE"));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn braid_nf_round_trip() {
    let out = run(&["braid", "nf", "--strands", "4", "--word", "1 2 -1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("delta_power"));
    // The braid relation has canonical form Δ with no factors.
    let a = run(&["braid", "nf", "--strands", "3", "--word", "1 2 1"]);
    let b = run(&["braid", "nf", "--strands", "3", "--word", "2 1 2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn word_problem_exit_codes() {
    let eq = run(&["wp", "--family", "mn", "--n", "2", "--u", "1 2 1", "--v", "2 2"]);
    assert_eq!(eq.status.code(), Some(0));
    let ne = run(&["wp", "--family", "mn", "--n", "2", "--u", "1", "--v", "2"]);
    assert_eq!(ne.status.code(), Some(1));
    let nf = run(&["wp", "--family", "mn", "--n", "2", "--u", "-2 1 2 1"]);
    assert_eq!(nf.status.code(), Some(0));
    assert!(stdout(&nf).contains("r2"));
}

#[test]
fn nf_lcm_gcd_text_output() {
    let nf = run(&["nf", "--family", "mn", "--n", "2", "--word", "1 2 1 2"]);
    assert_eq!(stdout(&nf).trim(), "r2·r2·r2");
    let lcm = run(&["lcm", "--family", "mn", "--n", "3", "--side", "right", "--u", "1", "--v", "2"]);
    assert!(stdout(&lcm).contains("lcm = r1·r3·r1"));
    let gcd = run(&["gcd", "--family", "mn", "--n", "2", "--side", "left", "--u", "1 2", "--v", "2 1"]);
    assert!(stdout(&gcd).contains("gcd = 1"));
}

#[test]
fn report_json_matches_schema_and_markdown_is_deterministic() {
    let out = run(&["report", "--n-max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    validate(&schema("report.schema.json"), &doc, "$").unwrap();
    for item in doc["items"].as_array().unwrap() {
        assert_eq!(item["status"], "pass", "{item}");
    }
    let a = run(&["report", "--n-max", "2"]);
    let b = run(&["report", "--n-max", "2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn generic_json_envelope_matches_schema() {
    for args in [
        vec!["--json", "oracle", "equal", "--family", "mn", "--n", "2", "--u", "1", "--v", "1"],
        vec!["--json", "nf", "--family", "mn", "--n", "2", "--word", "1 1"],
        vec!["--json", "order", "--family", "mn", "--n", "2", "--add-relator", "r1^2"],
        vec!["--json", "braid", "nf", "--strands", "3", "--word", "1"],
    ] {
        let out = run(&args);
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        validate(&schema("result.schema.json"), &doc, "$").unwrap();
    }
}

#[test]
fn usage_errors_exit_three() {
    let out = run(&["lattice", "--family", "nosuch", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["report", "--n-max", "99"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["order"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn presentation_file_with_delta() {
    let tmp = std::env::temp_dir().join(format!("garside-kit-pres-{}.json", std::process::id()));
    std::fs::write(
        &tmp,
        r#"{"generators":[{"name":"a"},{"name":"b"}],"relations":[{"lhs":[1,2,1],"rhs":[2,2]}]}"#,
    )
    .unwrap();
    let out = run(&[
        "lattice",
        "--presentation",
        tmp.to_str().unwrap(),
        "--delta",
        "2 2 2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["simples"].as_array().unwrap().len(), 8);
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn outputs_are_idempotent() {
    for args in [
        vec!["lattice", "mn", "--n", "3", "--format", "dot"],
        vec!["family", "--kind", "hn", "--n", "4", "--emit", "json"],
        vec!["verify", "cube", "--family", "mnp", "--n", "5"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout(&a), stdout(&b));
        assert_eq!(a.status.code(), b.status.code());
    }
}
