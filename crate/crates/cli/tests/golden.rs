//! Byte-exact golden outputs for the `wpo` command line.
//!
//! Run with `WPO_BLESS=1` to rewrite the files after an intended change.

mod common;

use common::{golden_dir, mismatches, render, CASES};

#[test]
fn golden_outputs_match() {
    if std::env::var_os("WPO_BLESS").is_some() {
        for (name, args) in CASES {
            std::fs::write(golden_dir().join(format!("{name}.out")), render(args)).unwrap();
        }
        return;
    }
    let report: Vec<String> = mismatches()
        .into_iter()
        .map(|(name, expected, actual)| format!("{name}:\n--- expected\n{expected}--- actual\n{actual}"))
        .collect();
    assert!(report.is_empty(), "{}", report.join("\n"));
}

#[test]
fn outputs_are_deterministic() {
    for (_, args) in CASES {
        assert_eq!(render(args), render(args));
    }
}
