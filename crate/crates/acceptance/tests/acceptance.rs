//! The nine acceptance criteria, run in order with one PASS/FAIL line each.
//!
//! `cargo test -p wpo-tests --test acceptance`
//!
//! Expected values come from oracles written here (subset enumeration,
//! explicit composition) or are hand-checked strings, not from the rule engine.

#[path = "../../cli/tests/common/mod.rs"]
mod common;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wpo_core::algebra::{consistency_relations, evaluate, random_term, RelationStatus, TermSampler};
use wpo_core::oracle::{
    chain_multiset_ordinal, check_transformation_lemma, enumerate_multisets,
    h_sup_product_by_recursion, hess_prod_by_recursion, leq_r, ordinals_below_omega_cubed,
    rank_invariants, sot_brute_force_guarded, Comparator, LemmaId, Verdict,
};
use wpo_core::ordinal::OrdinalSampler;
use wpo_core::poset::{all_posets, random_poset, Composition, FinitePoset, ResidualKind};
use wpo_core::query::parse_query;
use wpo_core::Ordinal;

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: String) -> Outcome {
    Outcome { passed, summary }
}

fn seeded(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

/// Labeled posets on at most four elements, then `extra` random posets of 5 to 7 elements.
fn corpus(extra: usize, salt: u64) -> Vec<FinitePoset> {
    let mut rng = seeded(salt);
    let mut out: Vec<FinitePoset> = (0..=4).flat_map(all_posets).collect();
    for _ in 0..extra {
        let n = rng.gen_range(5..=7);
        let density = rng.gen_range(0.05..0.8);
        out.push(random_poset(&mut rng, n, density));
    }
    out
}

fn is_chain(p: &FinitePoset, s: &[usize]) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| p.le(a, b) || p.le(b, a)))
}

fn is_antichain(p: &FinitePoset, s: &[usize]) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| a == b || p.incomparable(a, b)))
}

/// Longest chain and widest antichain by enumerating every subset.
fn subset_oracle(p: &FinitePoset) -> (usize, usize) {
    let n = p.len();
    let (mut h, mut w) = (0, 0);
    for mask in 0u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if is_chain(p, &s) {
            h = h.max(s.len());
        }
        if is_antichain(p, &s) {
            w = w.max(s.len());
        }
    }
    (h, w)
}

fn criterion_1(posets: &[FinitePoset]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for p in posets {
        let (h, w) = subset_oracle(p);
        match rank_invariants(p) {
            Ok(r) if (r.o, r.h, r.w) == (p.len(), h, w) => {}
            other => bad.push(format!("{p}: {other:?}, expected ({}, {h}, {w})", p.len())),
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "residual ranks match subset enumeration on {} posets, {} mismatches, {:.1}s (limit 60s){}",
            posets.len(),
            bad.len(),
            elapsed.as_secs_f64(),
            first(&bad)
        ),
    )
}

fn criterion_2(posets: &[FinitePoset]) -> Outcome {
    let bad: Vec<String> = posets
        .iter()
        .filter(|p| {
            let (h, w) = subset_oracle(p);
            p.len() > h * w
        })
        .map(|p| p.to_string())
        .collect();
    outcome(
        bad.is_empty(),
        format!("|X| <= h*w on {} posets, {} violations{}", posets.len(), bad.len(), first(&bad)),
    )
}

fn first(items: &[String]) -> String {
    items.first().map(|s| format!("; first: {s}")).unwrap_or_default()
}

/// Exhaustive search; 3x3 products need one more element than the default guard.
fn sot(p: &FinitePoset) -> usize {
    sot_brute_force_guarded(p, 9).expect("within guard").0
}

fn criterion_3() -> Outcome {
    let small: Vec<FinitePoset> = (1..=3).flat_map(all_posets).collect();
    let (mut pairs, mut lex_bad, mut disjoint_bad, mut cartesian_bad) = (0, vec![], vec![], vec![]);
    for a in &small {
        for b in &small {
            pairs += 1;
            let (sa, sb) = (sot(a), sot(b));
            let lex = sot(&FinitePoset::compose(Composition::LexSum, a, b));
            if lex != sa + sb {
                lex_bad.push(format!("{a} + {b}: {lex} != {}", sa + sb));
            }
            let disjoint = sot(&FinitePoset::compose(Composition::DisjointSum, a, b));
            let expected = 1 + (a.len() - 1) + (b.len() - 1);
            if disjoint != expected {
                disjoint_bad.push(format!("{a} U {b}: {disjoint} != {expected}"));
            }
            let product = sot(&FinitePoset::compose(Composition::Cartesian, a, b));
            let bound = (a.len() - 1) * b.len();
            if product < bound {
                cartesian_bad.push(format!("{a} x {b}: sot {product} < bound {bound}"));
            }
        }
    }

    let sampled = corpus(300, 3);
    let (mut delta_bad, mut residual_bad) = (vec![], vec![]);
    for p in &sampled {
        let value = sot(p);
        let stripped = p.stripped_indices();
        let n = stripped.len();
        if !(n / 2 <= value && value <= n) {
            delta_bad.push(format!("{p}: sot {value}, |str| {n}"));
        }
        let recursive = stripped
            .iter()
            .map(|&x| sot(&p.residual(&ResidualKind::NotGeq(x)).expect("pivot in range")) + 1)
            .max()
            .unwrap_or(0);
        if recursive != value {
            residual_bad.push(format!("{p}: sot {value}, residual maximum {recursive}"));
        }
    }

    let ok = [&lex_bad, &disjoint_bad, &cartesian_bad, &delta_bad, &residual_bad]
        .iter()
        .all(|v| v.is_empty());
    outcome(
        ok,
        format!(
            "{pairs} pairs: + {} violations, U {} violations, x lower bound {} violations{}; \
             {} sampled posets: delta bound {} violations, residual identity {} violations{}",
            lex_bad.len(),
            disjoint_bad.len(),
            cartesian_bad.len(),
            first(&cartesian_bad),
            sampled.len(),
            delta_bad.len(),
            residual_bad.len(),
            first(&[lex_bad, disjoint_bad, delta_bad, residual_bad].concat()),
        ),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let small: Vec<FinitePoset> = (0..=3).flat_map(all_posets).collect();
    let lemmas = [LemmaId::EmbSqcup, LemmaId::RSqcup, LemmaId::RPlus, LemmaId::EmbPlusAug];
    let mut rng = seeded(4);
    let sampled_k4: Vec<(usize, usize)> = (0..40)
        .map(|_| (rng.gen_range(0..small.len()), rng.gen_range(0..small.len())))
        .collect();
    let instances = small
        .iter()
        .flat_map(|a| small.iter().map(move |b| (a, b, 3)))
        .chain(sampled_k4.iter().map(|&(i, j)| (&small[i], &small[j], 4)));
    let (mut checks, mut bad) = (0, Vec::new());
    for (a, b, k) in instances {
        for lemma in lemmas {
            checks += 1;
            let report = check_transformation_lemma(lemma, a, b, k, Comparator::Correct)
                .expect("small factors");
            if report.verdict != Verdict::Pass {
                bad.push(format!(
                    "{lemma} on {a}, {b}, k={k}: {}",
                    report.describe_counterexample().unwrap_or_default()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(120),
        format!(
            "{checks} lemma checks (k=3 exhaustive, 40 sampled pairs at k=4), {} violations, {:.1}s (limit 120s){}",
            bad.len(),
            elapsed.as_secs_f64(),
            first(&bad)
        ),
    )
}

fn criterion_5() -> Outcome {
    let (mut pairs, mut bad) = (0, Vec::new());
    for n in 1..=4 {
        let chain = FinitePoset::chain(n);
        let all = enumerate_multisets(&chain, 5);
        let images: Vec<Ordinal> = all
            .iter()
            .map(|m| chain_multiset_ordinal(n, m).expect("own elements"))
            .collect();
        for (m, a) in all.iter().zip(&images) {
            for (m2, b) in all.iter().zip(&images) {
                pairs += 1;
                if leq_r(&chain, m, m2).expect("own elements") != (a <= b) {
                    bad.push(format!("chain({n}) {} vs {}", m.labeled(&chain), m2.labeled(&chain)));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{pairs} multiset pairs over chains, {} disagreements{}", bad.len(), first(&bad)),
    )
}

fn eval(query: &str) -> String {
    let q = parse_query(query).expect("valid query");
    let (tuple, _) = evaluate(&q.term);
    tuple.get(q.function.name()).expect("single function").to_string()
}

fn criterion_6() -> Outcome {
    let mut cases: Vec<(String, &str)> = vec![
        ("w(Md(Gamma(1)))".into(), "1"),
        ("w(Md(Gamma(2)))".into(), "w"),
        ("w(Md(Gamma(3)))".into(), "w^2"),
        ("w(Md(Gamma(4)))".into(), "w^3"),
        ("w(Md(Gamma(5)))".into(), "w^4"),
        ("w(Mr(H + H))".into(), "w^(w*2)"),
        ("w(Mr(H + w))".into(), "w^w"),
    ];
    // (X, o(Mr(X)), o(Md(X))), worked by hand from o(X) and its hat
    let golden = [
        ("Gamma(3)", "w^3", "w^3"),
        ("Gamma(0)", "1", "1"),
        ("H", "w^w", "w^w"),
        ("w + 1", "w^(w + 1)", "w^(w + 1)"),
        ("eps0", "eps0", "w^(w^(eps0 + 1))"),
        ("eps0 + 2", "w^(eps0 + 2)", "w^(w^(eps0 + 1) + 2)"),
        ("eps1 + eps0", "w^(eps1 + eps0)", "w^(w^(eps1 + 1) + w^(eps0 + 1))"),
        ("H + H", "w^(w*2)", "w^(w*2)"),
        ("H x w", "w^(w^2)", "w^(w^2)"),
        ("Md(Gamma(2))", "w^(w^2)", "w^(w^2)"),
    ];
    for (x, mr, md) in golden {
        cases.push((format!("o(Mr({x}))"), mr));
        cases.push((format!("o(Md({x}))"), md));
    }
    let bad: Vec<String> = cases
        .iter()
        .filter_map(|(q, expected)| {
            let got = eval(q);
            (got != *expected).then(|| format!("{q} = {got}, expected {expected}"))
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} printed and golden values, {} mismatches{}", cases.len(), bad.len(), first(&bad)),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(7);
    let sampler = OrdinalSampler::default();
    let mut bad = Vec::new();
    let samples = 1000;
    for _ in 0..samples {
        let (a, b, c) = (sampler.sample(&mut rng), sampler.sample(&mut rng), sampler.sample(&mut rng));
        let mut fail = |law: &str| bad.push(format!("{law}: a = {a}, b = {b}, c = {c}"));
        if a.nat_sum(&b) != b.nat_sum(&a) || a.nat_sum(&b).nat_sum(&c) != a.nat_sum(&b.nat_sum(&c)) {
            fail("natural sum");
        }
        if a.nat_prod(&b) != b.nat_prod(&a) || a.nat_prod(&b).nat_prod(&c) != a.nat_prod(&b.nat_prod(&c)) {
            fail("natural product");
        }
        if a.add(&b).add(&c) != a.add(&b.add(&c)) {
            fail("sum associativity");
        }
        if a.multiply(&b).multiply(&c) != a.multiply(&b.multiply(&c)) {
            fail("product associativity");
        }
        let hp = a.hess_prod(&b);
        if !(a.multiply(&b) <= hp && hp <= a.nat_prod(&b)) {
            fail("sandwich");
        }
        if a.hess_prod(&b.successor()) != hp.nat_sum(&a) {
            fail("successor recurrence");
        }
    }
    let grid = ordinals_below_omega_cubed(3);
    let mut grid_pairs = 0;
    for a in &grid {
        for b in &grid {
            grid_pairs += 1;
            if hess_prod_by_recursion(a, b).as_ref() != Ok(&a.hess_prod(b)) {
                bad.push(format!("hess_prod({a}, {b})"));
            }
            if !a.is_zero() && !b.is_zero() && h_sup_product_by_recursion(a, b).ok() != a.h_sup_product(b).ok() {
                bad.push(format!("h_sup_product({a}, {b})"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(30),
        format!(
            "{samples} random triples below eps_w and {grid_pairs} pairs below w^3, {} violations, {:.1}s (limit 30s){}",
            bad.len(),
            elapsed.as_secs_f64(),
            first(&bad)
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = seeded(8);
    let sampler = TermSampler::default();
    let (mut compared, mut bad) = (0, Vec::new());
    for _ in 0..20 {
        let t = random_term(&mut rng, &sampler);
        let report = consistency_relations(&t);
        compared += report.checks.iter().filter(|c| c.status != RelationStatus::Skipped).count();
        if !report.holds() {
            bad.push(report.to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!("20 seeded terms, {compared} relations with both sides known, {} violations{}", bad.len(), first(&bad)),
    )
}

fn criterion_9() -> Outcome {
    std::env::set_current_dir(common::cli_dir()).expect("cli package directory");
    let bad: Vec<String> = common::mismatches().into_iter().map(|(name, _, _)| name).collect();
    outcome(
        bad.is_empty(),
        format!("{} golden CLI cases, {} mismatches{}", common::CASES.len(), bad.len(), first(&bad)),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let posets = corpus(500, 1);
    let criteria: [Criterion; 9] = [
        ("residual-rank oracle", Box::new(|| criterion_1(&posets))),
        ("height-width bound", Box::new(|| criterion_2(&posets))),
        ("safe order type formulas", Box::new(criterion_3)),
        ("transformation lemmas", Box::new(criterion_4)),
        ("chain multiset linearity", Box::new(criterion_5)),
        ("printed values", Box::new(criterion_6)),
        ("ordinal arithmetic laws", Box::new(criterion_7)),
        ("cross-ordering consistency", Box::new(criterion_8)),
        ("CLI golden files", Box::new(criterion_9)),
    ];
    let mut report = String::new();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.passed);
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(report, "{status} criterion {} ({name}): {}", i + 1, o.summary).unwrap();
    }
    print!("{report}");
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
