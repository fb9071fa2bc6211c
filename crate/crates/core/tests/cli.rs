use std::io::Write;

use serde_json::{json, Value};

use proper_rationals::cli::run_cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("proprat").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

// Type descriptors mirror docs/cli-json.md: "string", "integer", "boolean",
// "null", unions joined with '|', `[T]` for arrays and nested objects.
fn conforms(value: &Value, schema: &Value, path: &str) -> Result<(), String> {
    match schema {
        Value::String(types) => {
            let ok = types.split('|').any(|t| match t {
                "string" => value.is_string(),
                "integer" => value.is_i64() || value.is_u64() || value.is_string(),
                "boolean" => value.is_boolean(),
                "null" => value.is_null(),
                "pair" => value
                    .as_array()
                    .is_some_and(|a| a.len() == 2 && a.iter().all(Value::is_string)),
                other => panic!("unknown type {other}"),
            });
            if ok {
                Ok(())
            } else {
                Err(format!("{path}: {value} is not {types}"))
            }
        }
        Value::Array(item) => {
            let arr = value.as_array().ok_or(format!("{path}: expected array"))?;
            for (i, v) in arr.iter().enumerate() {
                conforms(v, &item[0], &format!("{path}[{i}]"))?;
            }
            Ok(())
        }
        Value::Object(fields) => {
            let obj = value
                .as_object()
                .ok_or(format!("{path}: expected object"))?;
            let want: Vec<&String> = fields.keys().collect();
            let got: Vec<&String> = obj.keys().collect();
            if want != got {
                return Err(format!("{path}: keys {got:?}, expected {want:?}"));
            }
            for (k, s) in fields {
                conforms(&obj[k], s, &format!("{path}.{k}"))?;
            }
            Ok(())
        }
        _ => unreachable!(),
    }
}

fn classify_schema() -> Value {
    json!({
        "input_text": "string",
        "value": "string",
        "classification": "string",
        "numerator": "integer",
        "denominator": "integer",
    })
}

fn explain_schema() -> Value {
    json!({
        "input_text": "string",
        "value": "string",
        "classification": "string",
        "applied_theorems": [{
            "name": "string",
            "condition_text": "string",
            "integer_result": "boolean",
            "witnesses": [{ "name": "string", "value": "string" }],
        }],
    })
}

#[test]
fn json_documents_match_schema() {
    let cases: Vec<(Vec<&str>, Value)> = vec![
        (vec!["classify", "5/3"], classify_schema()),
        (
            vec!["classify", "99999999999999999999 * 3"],
            classify_schema(),
        ),
        (vec!["explain", "1/2 + 1/3"], explain_schema()),
        (vec!["explain", "recip(-7/3)"], explain_schema()),
        (vec!["explain", "4"], explain_schema()),
        (
            vec!["roots", "0", "-4", "0", "1"],
            json!({ "polynomial": "string", "coefficients": ["integer"], "roots": ["integer"] }),
        ),
        (
            vec!["vieta", "3", "-10"],
            json!({
                "i1": "integer", "i2": "integer", "polynomial": "string",
                "coefficients": ["integer"], "roots": ["integer"], "double_root": "boolean",
                "sum": "integer|null", "product": "integer|null",
            }),
        ),
        (
            vec!["vieta", "1", "1"],
            json!({
                "i1": "integer", "i2": "integer", "polynomial": "string",
                "coefficients": ["integer"], "roots": ["integer"], "double_root": "boolean",
                "sum": "integer|null", "product": "integer|null",
            }),
        ),
        (
            vec!["search-t7", "--max-num", "5", "--max-den", "5"],
            json!({
                "max_num": "integer", "max_den": "integer", "found": "boolean",
                "pair": "pair|null", "pairs_scanned": "integer",
            }),
        ),
        (
            vec![
                "check",
                "--theorem",
                "t5",
                "--max-num",
                "4",
                "--max-den",
                "4",
            ],
            json!({
                "theorem": "string", "name": "string", "max_num": "integer",
                "max_den": "integer", "cases_checked": "integer", "all_agree": "boolean",
            }),
        ),
    ];
    for (args, schema) in cases {
        let doc = run_json(&args);
        conforms(&doc, &schema, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn text_and_json_report_the_same_values() {
    for e in [
        "5/3",
        "-6/4",
        "1/2 + 1/2",
        "3/4 * 6",
        "recip(-3/2)",
        "0",
        "7 * 1/7",
    ] {
        let (_, text, _) = run(&["classify", e]);
        let doc = run_json(&["classify", e]);
        let value = doc["value"].as_str().unwrap();
        let class = doc["classification"].as_str().unwrap();
        assert!(text.starts_with(&format!("{value} : {class} (")), "{text}");

        let (_, text, _) = run(&["explain", e]);
        let doc = run_json(&["explain", e]);
        assert!(text.starts_with(&format!(
            "{e} = {} : {}",
            doc["value"].as_str().unwrap(),
            doc["classification"].as_str().unwrap()
        )));
        for t in doc["applied_theorems"].as_array().unwrap() {
            assert!(text.contains(t["name"].as_str().unwrap()));
            for w in t["witnesses"].as_array().unwrap() {
                let pair = format!(
                    "{}: {}",
                    w["name"].as_str().unwrap(),
                    w["value"].as_str().unwrap()
                );
                assert!(text.contains(&pair), "{text} lacks {pair}");
            }
        }
    }

    let (_, text, _) = run(&["vieta", "-1", "-6"]);
    let doc = run_json(&["vieta", "-1", "-6"]);
    assert_eq!(doc["roots"], json!([-3, 2]));
    assert_eq!(doc["sum"], json!(-1));
    assert_eq!(doc["product"], json!(-6));
    assert!(text.contains("roots [-3, 2], sum -1, product -6"));

    let (_, text, _) = run(&["search-t7", "--max-num", "6", "--max-den", "6"]);
    let doc = run_json(&["search-t7", "--max-num", "6", "--max-den", "6"]);
    assert_eq!(
        text.trim(),
        format!("no counterexample; pairs scanned: {}", doc["pairs_scanned"])
    );
}

#[test]
fn big_integers_serialize_as_strings() {
    let doc = run_json(&["classify", "99999999999999999999 * 3"]);
    assert_eq!(doc["numerator"], json!("299999999999999999997"));
    assert_eq!(doc["denominator"], json!(1));
}

#[test]
fn batch_mode_is_line_for_line() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let lines = ["1/2 + 1/2", "oops", "", "3/4 * 8", "recip(0)", "-5/10"];
    for l in lines {
        writeln!(file, "{l}").unwrap();
    }
    let path = file.path().to_str().unwrap();

    let (code, out, err) = run(&["classify", "--batch", path]);
    assert_eq!(code, 1);
    assert!(err.contains("3 of 6 lines failed"), "{err}");
    let got: Vec<&str> = out.lines().collect();
    assert_eq!(got.len(), lines.len());
    assert_eq!(got[0], "1/1 : integer (b=1)");
    assert!(got[1].starts_with("error: oops:"));
    assert!(got[2].starts_with("error: :"));
    assert_eq!(got[3], "6/1 : integer (b=1)");
    assert_eq!(got[4], "error: recip(0): reciprocal of zero");
    assert_eq!(got[5], "-1/2 : proper rational (standard form, b=2)");

    let (code, out, _) = run(&["explain", "--batch", path, "--json"]);
    assert_eq!(code, 1);
    let docs: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), lines.len());
    for (doc, line) in docs.iter().zip(lines) {
        assert_eq!(doc["input_text"], json!(line));
    }
    assert!(docs[1]["error"].is_string());
    assert_eq!(docs[3]["value"], json!("6/1"));

    let mut ok = tempfile::NamedTempFile::new().unwrap();
    writeln!(ok, "1/3\n2/3").unwrap();
    let (code, out, _) = run(&["classify", "--batch", ok.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn exit_codes_and_usage() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["classify"]).0, 1);
    assert_eq!(run(&["vieta", "1"]).0, 1);
    assert_eq!(run(&["vieta", "x", "1"]).0, 1);
    assert_eq!(
        run(&[
            "check",
            "--theorem",
            "t9",
            "--max-num",
            "2",
            "--max-den",
            "2"
        ])
        .0,
        1
    );
    assert_eq!(run(&["classify", "--batch", "/nonexistent/file"]).0, 1);
    assert_eq!(run(&["classify", "1/2", "--batch", "x"]).0, 1);
    assert_eq!(run(&["roots", "5"]).0, 1);

    let (code, out, err) = run(&["classify", "1 +"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("position 3"), "{err}");

    let (code, out, _) = run(&["classify", "-3/2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-3/2 : proper rational (standard form, b=2)\n");

    let (code, out, _) = run(&["roots", "-6", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x^2 + x - 6 : integer roots [-3, 2]\n");
}

#[test]
fn search_and_check_run_through_the_cli() {
    let (code, out, _) = run(&[
        "check",
        "--theorem",
        "t3",
        "--max-num",
        "3",
        "--max-den",
        "3",
    ]);
    assert_eq!(code, 0);
    // 8 proper rationals times 7 integers
    assert!(out.starts_with("scale (t3): 56 cases checked"), "{out}");

    let (code, out, _) = run(&[
        "check",
        "--theorem",
        "t4",
        "--max-num",
        "3",
        "--max-den",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("sum (t4): 36 cases checked"), "{out}");
}
