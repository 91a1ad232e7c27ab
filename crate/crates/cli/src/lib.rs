//! The `wpo` command line: `eval` answers invariant queries, `verify` runs
//! the seeded property suites.
//!
//! Everything funnels through [`run`], which returns the text and exit code
//! instead of printing, so tests can compare output byte for byte.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use wpo_core::algebra::{evaluate, InvariantTuple, InvariantValue, TraceRecord};
use wpo_core::query::{parse_query, Function};
use wpo_core::verify::{self, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wpo", version, about = "Ordinal invariants of well partial orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a query such as "w(Md(Gamma(3)))"
    Eval(EvalArgs),
    /// Run the seeded property suites
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    query: String,
    /// Append the per-node rule trace
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// residuals, sot, multiset-iso, ordinal-arith, relations or all
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    size_bound: usize,
    #[arg(long)]
    json: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        "expected one of residuals, sot, multiset-iso, ordinal-arith, relations, all".to_string()
    })
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_ERROR,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            // --help and --version are not errors
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_ERROR,
                }
            } else {
                Outcome::out(text, EXIT_OK)
            };
        }
    };
    match cli.command {
        Command::Eval(a) => eval(&a),
        Command::Verify(a) => run_verify(&a),
    }
}

/// Evaluates one query. Shared with the tests so the contract lives in one place.
pub fn eval_query(query: &str, trace: bool, json: bool) -> Outcome {
    eval(&EvalArgs {
        query: query.to_string(),
        trace,
        json,
    })
}

fn eval(a: &EvalArgs) -> Outcome {
    let q = match parse_query(&a.query) {
        Ok(q) => q,
        Err(e) => return Outcome::error(e),
    };
    let (tuple, records) = evaluate(&q.term);
    let values: Vec<(&str, &InvariantValue)> = match q.function {
        Function::All => tuple.components().to_vec(),
        f => vec![(f.name(), tuple.get(f.name()).expect("known component"))],
    };
    let code = if values.iter().all(|(_, v)| v.is_known()) {
        EXIT_OK
    } else {
        EXIT_UNKNOWN
    };
    let stdout = if a.json {
        json_document(&a.query, q.function, &values, a.trace.then_some(&records[..]))
    } else {
        let mut s = String::new();
        if let [(_, v)] = values.as_slice() {
            s.push_str(&format!("{v}\n"));
        } else {
            for (name, v) in &values {
                s.push_str(&format!("{name} = {v}\n"));
            }
        }
        if a.trace {
            s.push_str("trace:\n");
            for r in &records {
                s.push_str(&format!("  {r}\n"));
            }
        }
        s
    };
    Outcome::out(stdout, code)
}

fn value_json(v: &InvariantValue) -> Value {
    match v {
        InvariantValue::Known(o) => json!({ "status": "known", "value": o.to_string() }),
        InvariantValue::Unknown(u) => {
            let mut m = json!({ "status": "unknown", "reason": u.reason });
            if u.lower.is_some() || u.upper.is_some() {
                m["bounds"] = json!({
                    "lower": u.lower.as_ref().map(|o| o.to_string()),
                    "upper": u.upper.as_ref().map(|o| o.to_string()),
                });
            }
            m
        }
    }
}

fn tuple_json(t: &InvariantTuple) -> Value {
    let mut m = serde_json::Map::new();
    for (name, v) in t.components() {
        m.insert(name.to_string(), value_json(v));
    }
    Value::Object(m)
}

#[derive(Serialize)]
struct TraceJson<'a> {
    node: &'a str,
    depth: usize,
    rule: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a str>,
    tuple: Value,
}

fn json_document(
    query: &str,
    function: Function,
    values: &[(&str, &InvariantValue)],
    trace: Option<&[TraceRecord]>,
) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("query".into(), json!(query));
    doc.insert("function".into(), json!(function.name()));
    if let [(_, v)] = values {
        if let Value::Object(m) = value_json(v) {
            doc.extend(m);
        }
    } else {
        let known = values.iter().all(|(_, v)| v.is_known());
        doc.insert("status".into(), json!(if known { "known" } else { "unknown" }));
        let mut m = serde_json::Map::new();
        for (name, v) in values {
            m.insert(name.to_string(), value_json(v));
        }
        doc.insert("value".into(), Value::Object(m));
    }
    if let Some(records) = trace {
        let items: Vec<TraceJson> = records
            .iter()
            .map(|r| TraceJson {
                node: &r.node,
                depth: r.depth,
                rule: r.rule.key(),
                detail: r.detail.as_deref(),
                tuple: tuple_json(&r.tuple),
            })
            .collect();
        doc.insert("trace".into(), json!(items));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
    s.push('\n');
    s
}

fn run_verify(a: &VerifyArgs) -> Outcome {
    let config = VerifyConfig {
        suite: a.suite,
        max_size: a.max_size,
        samples: a.samples,
        seed: a.seed,
        size_bound: a.size_bound,
        ..VerifyConfig::default()
    };
    verify_with(&config, a.json)
}

/// Runs a verification config and renders it as the CLI would. Exposed so
/// fault-injected configurations can be exercised from tests.
pub fn verify_with(config: &VerifyConfig, json: bool) -> Outcome {
    let report = match verify::run(config) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        format!("{report}\n")
    };
    Outcome::out(stdout, code)
}
