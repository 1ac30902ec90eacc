//! CLI acceptance: every command's --json output validates against the
//! published schemas, the catalog round-trips byte-identically, and the
//! documented exit codes appear under induced failures.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn concord() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_concord"));
    // isolate from any ambient catalog file
    c.env_remove("CONCORD_CATALOG");
    c.current_dir(env!("CARGO_TARGET_TMPDIR"));
    c
}

fn run_ok(args: &[&str]) -> String {
    let out = concord().args(args).output().expect("spawn concord");
    assert!(
        out.status.success(),
        "concord {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn run_code(args: &[&str]) -> (i32, Output) {
    let out = concord().args(args).output().expect("spawn concord");
    (out.status.code().unwrap_or(-1), out)
}

// ---------------------------------------------------------------------------
// A validator for the draft-07 subset the published schemas use.
// ---------------------------------------------------------------------------

struct SchemaDoc {
    root: Value,
}

impl SchemaDoc {
    fn load(name: &str) -> Self {
        let path = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("schemas")
            .join(name);
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("schema {}: {}", path.display(), e));
        SchemaDoc {
            root: serde_json::from_str(&text).expect("schema parses"),
        }
    }

    fn validate(&self, value: &Value) {
        let mut errors = Vec::new();
        self.check(&self.root, value, "$", &mut errors);
        assert!(errors.is_empty(), "schema violations: {:#?}", errors);
    }

    fn resolve<'a>(&'a self, schema: &'a Value) -> &'a Value {
        if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
            let key = r
                .strip_prefix("#/definitions/")
                .expect("only definition refs are used");
            return self
                .root
                .get("definitions")
                .and_then(|d| d.get(key))
                .expect("dangling $ref");
        }
        schema
    }

    fn check(&self, schema: &Value, value: &Value, path: &str, errors: &mut Vec<String>) {
        let schema = self.resolve(schema);
        if let Some(enum_vals) = schema.get("enum").and_then(Value::as_array) {
            if !enum_vals.contains(value) {
                errors.push(format!("{}: {} not in enum", path, value));
            }
            return;
        }
        if let Some(ty) = schema.get("type") {
            let allowed: Vec<&str> = match ty {
                Value::String(s) => vec![s.as_str()],
                Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
                _ => vec![],
            };
            let actual = match value {
                Value::Null => "null",
                Value::Bool(_) => "boolean",
                Value::Number(n) => {
                    if n.is_i64() || n.is_u64() {
                        "integer"
                    } else {
                        "number"
                    }
                }
                Value::String(_) => "string",
                Value::Array(_) => "array",
                Value::Object(_) => "object",
            };
            let ok = allowed.iter().any(|a| {
                *a == actual || (*a == "number" && actual == "integer")
            });
            if !ok {
                errors.push(format!("{}: type {} not in {:?}", path, actual, allowed));
                return;
            }
        }
        match value {
            Value::Object(map) => {
                let props = schema.get("properties").and_then(Value::as_object);
                if let Some(req) = schema.get("required").and_then(Value::as_array) {
                    for r in req.iter().filter_map(Value::as_str) {
                        if !map.contains_key(r) {
                            errors.push(format!("{}: missing required '{}'", path, r));
                        }
                    }
                }
                if let Some(props) = props {
                    for (k, v) in map {
                        match props.get(k) {
                            Some(sub) => {
                                self.check(sub, v, &format!("{}.{}", path, k), errors)
                            }
                            None => {
                                if schema.get("additionalProperties")
                                    == Some(&Value::Bool(false))
                                {
                                    errors.push(format!(
                                        "{}: unexpected property '{}'",
                                        path, k
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            Value::Array(items) => {
                if let Some(item_schema) = schema.get("items") {
                    for (i, v) in items.iter().enumerate() {
                        self.check(item_schema, v, &format!("{}[{}]", path, i), errors);
                    }
                }
            }
            _ => {}
        }
    }
}

fn validate_json(schema_file: &str, output: &str) {
    let value: Value = serde_json::from_str(output).expect("command printed JSON");
    SchemaDoc::load(schema_file).validate(&value);
}

const KNOT_ENTRIES: &[&str] = &["unknot", "trefoil", "figure-eight", "R1"];
const ALL_ENTRIES: &[&str] = &[
    "unknot",
    "trefoil",
    "figure-eight",
    "R1",
    "T2",
    "T4",
    "T8",
];

#[test]
fn criterion_7_json_schemas_validate() {
    for knot in KNOT_ENTRIES {
        validate_json(
            "invariants.schema.json",
            &run_ok(&["--json", "invariants", knot]),
        );
        validate_json("rho0.schema.json", &run_ok(&["--json", "rho0", knot]));
        validate_json("sigfn.schema.json", &run_ok(&["--json", "sigfn", knot]));
        validate_json(
            "metabolizers.schema.json",
            &run_ok(&["--json", "metabolizers", knot]),
        );
        validate_json(
            "blanchfield.schema.json",
            &run_ok(&["--json", "blanchfield", knot]),
        );
        validate_json(
            "obstruct.schema.json",
            &run_ok(&["--json", "obstruct", knot]),
        );
    }
    // pairing arguments and composite terms
    validate_json(
        "blanchfield.schema.json",
        &run_ok(&["--json", "blanchfield", "R1", "e1", "e2"]),
    );
    for term in [
        "Jn(2, trefoil)",
        "BD^2(Jn(1, trefoil))",
        "BD(figure-eight)",
        "sum(trefoil, mirror(trefoil))",
        "Jn(2, unknot)",
    ] {
        validate_json(
            "obstruct.schema.json",
            &run_ok(&["--json", "obstruct", term]),
        );
    }
    for n in 0..=3 {
        validate_json(
            "family.schema.json",
            &run_ok(&["--json", "family", &n.to_string(), "trefoil"]),
        );
    }
    for word in ["x1", "[x1,x2]", "[[x1,x2],[x3,x4]]"] {
        validate_json("depth.schema.json", &run_ok(&["--json", "depth", word]));
    }
    validate_json(
        "catalog-list.schema.json",
        &run_ok(&["--json", "catalog", "list"]),
    );
    println!("ACCEPTANCE criterion 7a (schema validation): PASS");
}

#[test]
fn criterion_7_catalog_round_trip() {
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cat-roundtrip.json");
    let _ = std::fs::remove_file(&tmp);
    let tmp_str = tmp.to_str().unwrap();

    // a fresh entry to add: trefoil under a new name
    let entry_path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("entry.json");
    let entry_json = r#"{
  "flags": { "amphichiral": false, "ribbon": false, "slice": false },
  "kind": "knot",
  "matrix": [-1, 1, 0, -1]
}"#;
    std::fs::write(&entry_path, entry_json).unwrap();

    let add_out = concord()
        .env("CONCORD_CATALOG", tmp_str)
        .args(["--json", "catalog", "add", "trefoil-copy", entry_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(add_out.status.success(), "{:?}", add_out);
    validate_json(
        "catalog-add.schema.json",
        &String::from_utf8(add_out.stdout).unwrap(),
    );

    // the persisted file loads and re-saves byte-identically
    let bytes1 = std::fs::read(&tmp).unwrap();
    let show = concord()
        .env("CONCORD_CATALOG", tmp_str)
        .args(["catalog", "show", "trefoil-copy"])
        .output()
        .unwrap();
    assert!(show.status.success());
    let shown = String::from_utf8(show.stdout).unwrap();
    // show prints the canonical serialization of the stored entry
    let value: Value = serde_json::from_str(&shown).unwrap();
    let expected: Value = serde_json::from_str(entry_json).unwrap();
    assert_eq!(value.get("trefoil-copy").unwrap(), &expected);

    // second add of the same entry leaves the file byte-identical
    let add2 = concord()
        .env("CONCORD_CATALOG", tmp_str)
        .args(["catalog", "add", "trefoil-copy", entry_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(add2.status.success());
    let bytes2 = std::fs::read(&tmp).unwrap();
    assert_eq!(bytes1, bytes2, "catalog round trip is not byte-identical");

    // the stored catalog is usable
    let inv = concord()
        .env("CONCORD_CATALOG", tmp_str)
        .args(["--json", "invariants", "trefoil-copy"])
        .output()
        .unwrap();
    assert!(inv.status.success());
    println!("ACCEPTANCE criterion 7b (catalog round trip): PASS");
}

#[test]
fn criterion_7_exit_codes() {
    // 0: success
    let (code, _) = run_code(&["invariants", "unknot"]);
    assert_eq!(code, 0);
    // 2: parse errors, with a position
    let (code, out) = run_code(&["invariants", "Jn(2 trefoil)"]);
    assert_eq!(code, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    let (code, _) = run_code(&["depth", "[x1 x2]"]);
    assert_eq!(code, 2);
    // 3: unknown catalog names
    let (code, _) = run_code(&["invariants", "nosuchknot"]);
    assert_eq!(code, 3);
    let (code, _) = run_code(&["catalog", "show", "nosuchknot"]);
    assert_eq!(code, 3);
    // 4: I/O failures
    let (code, _) = run_code(&["sigfn", "trefoil", "--csv", "/nonexistent-dir/x.csv"]);
    assert_eq!(code, 4);
    let missing = concord()
        .env("CONCORD_CATALOG", "/nonexistent-dir/cat.json")
        .args(["catalog", "list"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(4));
    // 5: capability bounds
    let (code, _) = run_code(&["depth", "[x1,x2]", "--kmax", "9"]);
    assert_eq!(code, 5);
    println!("ACCEPTANCE criterion 7c (exit codes): PASS");
}

#[test]
fn cli_examples_from_contract() {
    // invariants of the doubled family report the base pattern data
    let inv = run_ok(&["--json", "invariants", "Jn(3, trefoil)"]);
    let v: Value = serde_json::from_str(&inv).unwrap();
    assert_eq!(v["arf"], 0);
    assert_eq!(v["algebraically_slice"]["verdict"], "yes");
    assert_eq!(v["level"], "3 (rational)");
    let alexander = v["alexander"].as_str().unwrap();
    assert!(alexander.contains("t^2"));

    // unknot invariants
    let inv = run_ok(&["--json", "invariants", "unknot"]);
    let v: Value = serde_json::from_str(&inv).unwrap();
    assert_eq!(v["alexander"], "1");
    assert_eq!(v["arf"], 0);
    assert_eq!(v["rho0"]["exact"], "0");

    // trefoil invariants pin the headline exact values
    let inv = run_ok(&["--json", "invariants", "trefoil"]);
    let v: Value = serde_json::from_str(&inv).unwrap();
    assert_eq!(v["rho0"]["exact"], "-4/3");
    assert_eq!(v["algebraically_slice"]["verdict"], "no");

    // obstruct examples
    let ob = run_ok(&["--json", "obstruct", "BD^2(Jn(1, trefoil))"]);
    let v: Value = serde_json::from_str(&ob).unwrap();
    assert_eq!(v["verdict"], "obstructed");
    assert!(!v["certificate"]["conditions"].as_array().unwrap().is_empty());

    let ob = run_ok(&["--json", "obstruct", "Jn(2, trefoil)"]);
    let v: Value = serde_json::from_str(&ob).unwrap();
    assert_eq!(v["verdict"], "obstructed");
    assert_eq!(v["certificate"]["threshold"], "C(M_R2)");

    let ob = run_ok(&["--json", "obstruct", "BD(figure-eight)"]);
    let v: Value = serde_json::from_str(&ob).unwrap();
    assert_eq!(v["verdict"], "inconclusive");

    let ob = run_ok(&["--json", "obstruct", "Jn(2, unknot)"]);
    let v: Value = serde_json::from_str(&ob).unwrap();
    assert_eq!(v["verdict"], "slice-by-construction");

    // sigfn unknot: the single row (0, pi, 0)
    let rows = run_ok(&["sigfn", "unknot"]);
    let lines: Vec<&str> = rows.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("0.000000000000000000000000000000,3.14159265358979323846264338328"));
    assert!(lines[0].ends_with(",0"));

    // depth example
    let d = run_ok(&["--json", "depth", "[[x1,x2],[x3,x4]]", "--kmax", "3"]);
    let v: Value = serde_json::from_str(&d).unwrap();
    assert_eq!(v["depth"], 2);
    assert_eq!(v["exact"], true);
    println!("ACCEPTANCE criterion 7d (documented examples): PASS");
}
