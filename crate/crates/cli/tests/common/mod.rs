//! Golden cases shared by the golden and acceptance targets.

use std::fs;
use std::path::PathBuf;

use wpo_cli::run;

pub const CASES: [(&str, &[&str]); 15] = [
    ("w-md-gamma3", &["eval", "w(Md(Gamma(3)))"]),
    ("h-mr-omega-omega", &["eval", "h(Mr(w^w))"]),
    ("w-gamma2-x-h", &["eval", "w(Gamma(2) x H)"]),
    ("w-mr-h-plus-h", &["eval", "w(Mr(H + H))"]),
    ("w-mr-h-plus-omega", &["eval", "w(Mr(H + w))"]),
    ("o-md-omega-plus-1", &["eval", "o(Md(w + 1))"]),
    ("o-md-eps0", &["eval", "o(Md(eps0))"]),
    ("all-h-plus-omega2-trace", &["eval", "--trace", "all(H + w*2)"]),
    ("all-lex-product", &["eval", "all(Gamma(2) . w)"]),
    ("sot-md-trace", &["eval", "--trace", "sot(Md(Gamma(2)) + H)"]),
    ("sot-folded-json", &["eval", "--json", "--trace", "sot(Gamma(2) x 3)"]),
    ("h-cartesian-json", &["eval", "--json", "h(w x w^2)"]),
    ("all-poset-file", &["eval", "all(poset:tests/golden/diamond.json U Gamma(1))"]),
    ("parse-error", &["eval", "o(H x H . H)"]),
    ("verify-ordinal-arith", &["verify", "--suite", "ordinal-arith", "--samples", "30", "--seed", "7"]),
];

pub fn render(args: &[&str]) -> String {
    let outcome = run(std::iter::once("wpo").chain(args.iter().copied()));
    let mut s = format!("$ wpo {}\n", args.join(" "));
    s.push_str(&outcome.stdout);
    if !outcome.stderr.is_empty() {
        s.push_str("--- stderr\n");
        s.push_str(&outcome.stderr);
    }
    s.push_str(&format!("--- exit {}\n", outcome.code));
    s
}

/// The CLI package root. Poset paths in the cases are relative to it.
pub fn cli_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../cli")
}

pub fn golden_dir() -> PathBuf {
    cli_dir().join("tests/golden")
}

/// Cases whose output differs from the stored file, as (name, expected, actual).
pub fn mismatches() -> Vec<(String, String, String)> {
    CASES
        .iter()
        .filter_map(|(name, args)| {
            let actual = render(args);
            let path = golden_dir().join(format!("{name}.out"));
            let expected = fs::read_to_string(&path).unwrap_or_default();
            (actual != expected).then(|| (name.to_string(), expected, actual))
        })
        .collect()
}
