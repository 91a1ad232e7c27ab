use wpo_cli::{run, verify_with, EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN, EXIT_VERIFY_FAILED};
use wpo_core::oracle::Comparator;
use wpo_core::verify::{Suite, VerifyConfig};

fn wpo(args: &[&str]) -> wpo_cli::Outcome {
    run(std::iter::once("wpo").chain(args.iter().copied()))
}

#[test]
fn eval_exit_codes() {
    assert_eq!(wpo(&["eval", "o(H)"]).code, EXIT_OK);
    assert_eq!(wpo(&["eval", "w(Gamma(2) x H)"]).code, EXIT_UNKNOWN);
    assert_eq!(wpo(&["eval", "o(Gamma(2)"]).code, EXIT_ERROR);
    assert_eq!(wpo(&["eval", "o(poset:/nonexistent.json)"]).code, EXIT_ERROR);
    assert_eq!(wpo(&["bogus"]).code, EXIT_ERROR);
    assert_eq!(wpo(&["--help"]).code, EXIT_OK);
}

#[test]
fn parse_errors_report_position_and_expectations() {
    let out = wpo(&["eval", "w(Gamma(2) x )"]);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("column 14"), "{}", out.stderr);
    assert!(out.stderr.contains("expected"), "{}", out.stderr);
}

#[test]
fn structured_errors_leave_stdout_empty() {
    let out = wpo(&["eval", "--json", "h(Md("]);
    assert_eq!(out.code, EXIT_ERROR);
    assert!(out.stdout.is_empty());
}

#[test]
fn json_unknown_carries_reason_and_bounds() {
    let out = wpo(&["eval", "--json", "sot(w x H)"]);
    assert_eq!(out.code, EXIT_UNKNOWN);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["status"], "unknown");
    assert!(doc["reason"].as_str().unwrap().contains("cartesian"));
    assert_eq!(doc["bounds"]["lower"], "w");
}

#[test]
fn every_trace_line_cites_a_rule_key() {
    let keys: Vec<&str> = wpo_core::algebra::Rule::ALL.iter().map(|r| r.key()).collect();
    let out = wpo(&["eval", "--trace", "all(Md(Gamma(2) U w) + Mr(H x 3) . 2)"]);
    let lines: Vec<&str> = out.stdout.lines().skip_while(|l| *l != "trace:").skip(1).collect();
    assert_eq!(lines.len(), 11);
    for line in lines {
        let key = line.trim_start().trim_start_matches('[');
        let key = key.split([':', ']']).next().unwrap();
        assert!(keys.contains(&key), "{line}");
    }
}

#[test]
fn verify_residuals_on_all_four_element_posets() {
    let out = wpo(&["verify", "--suite", "residuals", "--max-size", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    // 1 + 1 + 3 + 19 + 219 labeled posets
    assert!(out.stdout.contains("243 instances"), "{}", out.stdout);
}

#[test]
fn verify_sot_on_sampled_six_element_posets() {
    let out = wpo(&["verify", "--suite", "sot", "--max-size", "6", "--samples", "200", "--seed", "42"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let args = ["verify", "--suite", "relations", "--samples", "25", "--seed", "3", "--json"];
    let a = wpo(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, wpo(&args));
    serde_json::from_str::<serde_json::Value>(&a.stdout).unwrap();
}

#[test]
fn verify_guards_are_usage_errors() {
    assert_eq!(wpo(&["verify", "--suite", "sot", "--max-size", "12"]).code, EXIT_ERROR);
    assert_eq!(wpo(&["verify", "--suite", "residuals", "--samples", "0"]).code, EXIT_ERROR);
    assert_eq!(wpo(&["verify", "--suite", "nope"]).code, EXIT_ERROR);
}

#[test]
fn broken_comparator_fails_verification() {
    let config = VerifyConfig {
        suite: Suite::MultisetIso,
        size_bound: 3,
        comparator: Comparator::NonInjective,
        ..VerifyConfig::default()
    };
    let out = verify_with(&config, false);
    assert_eq!(out.code, EXIT_VERIFY_FAILED);
    assert!(out.stdout.contains("FAIL"));
    assert!(out.stdout.contains("counterexample"));
}
