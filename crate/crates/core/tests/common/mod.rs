//! Golden-file runner shared by the CLI tests and the acceptance suite.
//!
//! Each case in `tests/golden/cases.json` runs the `proprat` binary and
//! compares its stdout byte for byte with `tests/golden/<name>.out`, and its
//! exit code with the case's `exit` (default 0). Cases marked `"stderr": true`
//! also pin stderr in `<name>.err`. Set `UPDATE_GOLDEN=1` to rewrite the
//! expected files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct CaseResult {
    pub name: String,
    pub failure: Option<String>,
}

pub fn run_golden_cases() -> Vec<CaseResult> {
    let dir = golden_dir();
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(dir.join("cases.json")).unwrap()).unwrap();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut results = Vec::new();
    for case in manifest.as_array().unwrap() {
        let name = case["name"].as_str().unwrap().to_string();
        let args: Vec<String> = case["args"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| {
                a.as_str()
                    .unwrap()
                    .replace("{golden}", dir.to_str().unwrap())
            })
            .collect();
        let want_exit = case.get("exit").and_then(Value::as_i64).unwrap_or(0);
        let output = Command::new(env!("CARGO_BIN_EXE_proprat"))
            .args(&args)
            .env("NO_COLOR", "1")
            .output()
            .expect("spawn proprat");
        let out_path = dir.join(format!("{name}.out"));
        let err_path = dir.join(format!("{name}.err"));
        let check_stderr = case.get("stderr").and_then(Value::as_bool).unwrap_or(false);
        if update {
            fs::write(&out_path, &output.stdout).unwrap();
            if check_stderr {
                fs::write(&err_path, &output.stderr).unwrap();
            }
        }
        let mut failure = None;
        let got_exit = i64::from(output.status.code().unwrap_or(-1));
        if got_exit != want_exit {
            failure = Some(format!(
                "exit {got_exit}, expected {want_exit}; stderr: {}",
                String::from_utf8_lossy(&output.stderr)
            ));
        } else {
            match fs::read(&out_path) {
                Ok(want) if want == output.stdout => {}
                Ok(want) => {
                    failure = Some(format!(
                        "stdout differs\n--- expected\n{}\n--- got\n{}",
                        String::from_utf8_lossy(&want),
                        String::from_utf8_lossy(&output.stdout)
                    ))
                }
                Err(e) => failure = Some(format!("missing {}: {e}", out_path.display())),
            }
            if failure.is_none() && check_stderr {
                match fs::read(&err_path) {
                    Ok(want) if want == output.stderr => {}
                    Ok(want) => {
                        failure = Some(format!(
                            "stderr differs\n--- expected\n{}\n--- got\n{}",
                            String::from_utf8_lossy(&want),
                            String::from_utf8_lossy(&output.stderr)
                        ))
                    }
                    Err(e) => failure = Some(format!("missing {}: {e}", err_path.display())),
                }
            }
        }
        results.push(CaseResult { name, failure });
    }
    results
}
