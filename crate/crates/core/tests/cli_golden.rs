mod common;

#[test]
fn golden_outputs_match() {
    let results = common::run_golden_cases();
    assert!(results.len() >= 25);
    let failures: Vec<String> = results
        .iter()
        .filter_map(|r| r.failure.as_ref().map(|f| format!("{}: {f}", r.name)))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}
