//! Seeded property suites behind `wpo verify`.
//!
//! Every suite is deterministic given its configuration: instances are drawn
//! from a ChaCha8 stream seeded from `seed` and the suite name, and the report
//! contains no timings, so identical commands give byte-identical output.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    consistency_relations, evaluate, fold_finite, invariants, random_finite_term, random_term,
    InvariantTuple, TermSampler, WpoTerm,
};
use crate::oracle::{
    check_height_width, check_transformation_lemma, delta_bound_check, enumerate_multisets,
    h_sup_product_by_recursion, hess_prod_by_recursion, leq_emb, leq_r, ordinals_below_omega_cubed,
    rank_invariants, sot_brute_force, sot_fast, sot_nonempty_reading, sot_residual_check,
    Comparator, LemmaId, Verdict, RANK_GUARD, SOT_GUARD,
};
use crate::ordinal::{Ordinal, OrdinalSampler};
use crate::poset::{all_posets, isomorphism_classes, random_poset, FinitePoset, ResidualKind};

/// Largest poset size enumerated exhaustively.
const EXHAUSTIVE_LIMIT: usize = 4;
/// Largest factor size and multiset bound for the lemma suite.
const LEMMA_FACTOR_LIMIT: usize = 3;
const LEMMA_BOUND_LIMIT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Residuals,
    Sot,
    MultisetIso,
    OrdinalArith,
    Relations,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 5] = [
        Suite::Residuals,
        Suite::Sot,
        Suite::MultisetIso,
        Suite::OrdinalArith,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Residuals => "residuals",
            Suite::Sot => "sot",
            Suite::MultisetIso => "multiset-iso",
            Suite::OrdinalArith => "ordinal-arith",
            Suite::Relations => "relations",
            Suite::All => "all",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
    pub size_bound: usize,
    /// Fault injection for the lemma suite; not reachable from the command line.
    #[serde(skip)]
    pub comparator: Comparator,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::All,
            max_size: 5,
            samples: 100,
            seed: 0,
            size_bound: 3,
            comparator: Comparator::Correct,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("--samples must be at least 1")]
    NoSamples,
    #[error("--max-size {value} exceeds the {suite} guard of {guard}")]
    MaxSize {
        suite: &'static str,
        value: usize,
        guard: usize,
    },
    #[error("--size-bound {value} exceeds the multiset-iso guard of {guard}")]
    SizeBound { value: usize, guard: usize },
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        for suite in self.suites() {
            let guard = match suite {
                Suite::Residuals => RANK_GUARD,
                Suite::Sot => SOT_GUARD,
                _ => continue,
            };
            if self.max_size > guard {
                return Err(ConfigError::MaxSize {
                    suite: suite.name(),
                    value: self.max_size,
                    guard,
                });
            }
        }
        if self.suites().contains(&Suite::MultisetIso) && self.size_bound > LEMMA_BOUND_LIMIT {
            return Err(ConfigError::SizeBound {
                value: self.size_bound,
                guard: LEMMA_BOUND_LIMIT,
            });
        }
        Ok(())
    }

    fn suites(&self) -> Vec<Suite> {
        match self.suite {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let salt = suite
            .name()
            .bytes()
            .fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
        ChaCha8Rng::seed_from_u64(self.seed ^ salt)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub property: String,
    pub instances: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyResult {
    fn new(suite: Suite, property: impl Into<String>) -> Self {
        PropertyResult {
            suite: suite.name(),
            property: property.into(),
            instances: 0,
            failures: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Records one instance; keeps the first failure as the counterexample.
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.properties.iter().map(|p| p.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            let status = if p.failures == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {}/{}: {} instances, {} failures",
                p.suite, p.property, p.instances, p.failures
            )?;
            if let Some(c) = &p.counterexample {
                writeln!(f, "  counterexample: {c}")?;
            }
            for n in &p.notes {
                writeln!(f, "  note: {n}")?;
            }
        }
        let total: usize = self.properties.iter().map(|p| p.instances).sum();
        write!(
            f,
            "{} properties, {total} instances, {} failures",
            self.properties.len(),
            self.failures()
        )
    }
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport, ConfigError> {
    config.validate()?;
    let mut properties = Vec::new();
    for suite in config.suites() {
        let mut rng = config.rng(suite);
        let results = match suite {
            Suite::Residuals => residuals(config, &mut rng),
            Suite::Sot => sot(config, &mut rng),
            Suite::MultisetIso => multiset_iso(config),
            Suite::OrdinalArith => ordinal_arith(config, &mut rng),
            Suite::Relations => relations(config, &mut rng),
            Suite::All => unreachable!("expanded by suites()"),
        };
        properties.extend(results);
    }
    Ok(VerifyReport {
        config: config.clone(),
        properties,
    })
}

/// All labeled posets up to the exhaustive limit, then random ones up to `max_size`.
fn poset_instances(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<FinitePoset> {
    let mut out: Vec<FinitePoset> = (0..=config.max_size.min(EXHAUSTIVE_LIMIT))
        .flat_map(all_posets)
        .collect();
    if config.max_size > EXHAUSTIVE_LIMIT {
        for _ in 0..config.samples {
            let n = rng.gen_range(EXHAUSTIVE_LIMIT + 1..=config.max_size);
            let density = rng.gen_range(0.1..0.7);
            out.push(random_poset(rng, n, density));
        }
    }
    out
}

fn residuals(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let s = Suite::Residuals;
    let mut rank = PropertyResult::new(s, "residual ranks equal (|X|, longest chain, widest antichain)");
    let mut hw = PropertyResult::new(s, "|X| <= h * w");
    let mut stripped = PropertyResult::new(s, "str(str(X)) = str(X)");
    let mut induced = PropertyResult::new(s, "residuals are induced substructures");
    for p in poset_instances(config, rng) {
        rank.record(rank_invariants(&p).is_ok(), || p.to_string());
        hw.record(check_height_width(&p).unwrap_or(false), || p.to_string());
        let st = p.stripped();
        stripped.record(st.stripped() == st, || p.to_string());
        let ok = (0..p.len()).all(|x| {
            [ResidualKind::NotGeq(x), ResidualKind::StrictlyBelow(x), ResidualKind::Incomparable(x)]
                .iter()
                .all(|k| {
                    let idx = p.residual_indices(k).expect("pivot in range");
                    let r = p.residual(k).expect("pivot in range");
                    idx.iter().enumerate().all(|(a, &i)| {
                        idx.iter().enumerate().all(|(b, &j)| r.le(a, b) == p.le(i, j))
                    })
                })
        });
        induced.record(ok, || p.to_string());
    }
    vec![rank, hw, stripped, induced]
}

fn sot(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let s = Suite::Sot;
    let mut residual = PropertyResult::new(s, "sot(X) = max(sot(X_{>=/x}) + 1 over x in str(X), else 0)");
    let mut delta = PropertyResult::new(s, "delta(|str X|) <= sot(X) <= |str X|");
    let mut dp = PropertyResult::new(s, "suffix-set search equals exhaustive search");
    let mut readings = PropertyResult::new(s, "nonempty-tuple reading (informational)");
    let mut disagreements = 0;
    let mut first: Option<String> = None;
    for p in poset_instances(config, rng) {
        residual.record(sot_residual_check(&p).unwrap_or(false), || p.to_string());
        delta.record(delta_bound_check(&p).unwrap_or(false), || p.to_string());
        let exhaustive = sot_brute_force(&p).map(|r| r.0).ok();
        dp.record(sot_fast(&p).ok() == exhaustive, || p.to_string());
        readings.instances += 1;
        if sot_nonempty_reading(&p).ok() != exhaustive {
            disagreements += 1;
            first.get_or_insert_with(|| p.to_string());
        }
    }
    readings.notes.push(format!(
        "the two readings of the safety condition disagree on {disagreements} posets{}",
        first.map(|p| format!(", first {p}")).unwrap_or_default()
    ));
    vec![residual, delta, dp, readings]
}

fn multiset_iso(config: &VerifyConfig) -> Vec<PropertyResult> {
    let s = Suite::MultisetIso;
    let factor_limit = config.max_size.min(LEMMA_FACTOR_LIMIT);
    let classes: Vec<FinitePoset> = (0..=factor_limit).flat_map(isomorphism_classes).collect();
    let k = config.size_bound;
    let mut out = Vec::new();
    for lemma in [LemmaId::EmbSqcup, LemmaId::RSqcup, LemmaId::RPlus, LemmaId::EmbPlusAug] {
        let mut r = PropertyResult::new(s, format!("{lemma} at k = {k}"));
        for a in &classes {
            for b in &classes {
                let report = check_transformation_lemma(lemma, a, b, k, config.comparator)
                    .expect("factors are small");
                r.record(report.verdict == Verdict::Pass, || {
                    format!(
                        "A = {a}, B = {b}: {}",
                        report.describe_counterexample().unwrap_or_default()
                    )
                });
            }
        }
        out.push(r);
    }
    let mut control = PropertyResult::new(s, "emb-plus-iso is refuted (negative control)");
    let g2 = FinitePoset::antichain(2);
    let report = check_transformation_lemma(LemmaId::EmbPlusIso, &g2, &g2, 2, config.comparator)
        .expect("factors are small");
    let refuted = report.verdict == Verdict::Fail && report.recheck().unwrap_or(false);
    control.record(refuted, || "no counterexample found for A = B = Gamma(2), k = 2".into());
    if let Some(c) = report.describe_counterexample() {
        control.notes.push(format!("counterexample {c}"));
    }
    out.push(control);

    let mut orders = PropertyResult::new(s, "both multiset orders are partial orders");
    let mut aug = PropertyResult::new(s, "m <=emb m' implies m <=r m' and |m| <= |m'|");
    for p in (0..=factor_limit).flat_map(isomorphism_classes) {
        let ms = enumerate_multisets(&p, k.min(4));
        for leq in [leq_emb, leq_r] {
            let rel: Vec<Vec<bool>> = ms
                .iter()
                .map(|m| ms.iter().map(|m2| leq(&p, m, m2).expect("own elements")).collect())
                .collect();
            let n = ms.len();
            let ok = (0..n).all(|i| rel[i][i])
                && (0..n).all(|i| (0..n).all(|j| i == j || !(rel[i][j] && rel[j][i])))
                && (0..n).all(|i| {
                    (0..n).all(|j| !rel[i][j] || (0..n).all(|l| !rel[j][l] || rel[i][l]))
                });
            orders.record(ok, || p.to_string());
        }
        let ok = ms.iter().all(|m| {
            ms.iter().all(|m2| {
                !leq_emb(&p, m, m2).expect("own elements")
                    || (leq_r(&p, m, m2).expect("own elements") && m.size() <= m2.size())
            })
        });
        aug.record(ok, || p.to_string());
    }
    out.push(orders);
    out.push(aug);
    out
}

fn ordinal_arith(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let s = Suite::OrdinalArith;
    let sampler = OrdinalSampler::default();
    let mut laws: Vec<(&str, PropertyResult)> = [
        "natural sum commutative and associative",
        "natural product commutative and associative",
        "sum and product associative",
        "a.b <= a(.)b <= a(x)b",
        "a(.)(b+1) = a(.)b (+) a",
        "b + (a - b) = a",
        "notation round-trips through text",
    ]
    .into_iter()
    .map(|name| (name, PropertyResult::new(s, name)))
    .collect();
    for _ in 0..config.samples {
        let (a, b, c) = (sampler.sample(rng), sampler.sample(rng), sampler.sample(rng));
        let show = || format!("a = {a}, b = {b}, c = {c}");
        laws[0].1.record(
            a.nat_sum(&b) == b.nat_sum(&a) && a.nat_sum(&b).nat_sum(&c) == a.nat_sum(&b.nat_sum(&c)),
            show,
        );
        laws[1].1.record(
            a.nat_prod(&b) == b.nat_prod(&a)
                && a.nat_prod(&b).nat_prod(&c) == a.nat_prod(&b.nat_prod(&c)),
            show,
        );
        laws[2].1.record(
            a.add(&b).add(&c) == a.add(&b.add(&c))
                && a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c)),
            show,
        );
        let hp = a.hess_prod(&b);
        laws[3].1.record(a.multiply(&b) <= hp && hp <= a.nat_prod(&b), show);
        laws[4].1.record(a.hess_prod(&b.successor()) == hp.nat_sum(&a), show);
        let (lo, hi) = if a <= b { (&a, &b) } else { (&b, &a) };
        laws[5].1.record(
            hi.left_subtract(lo).map(|d| lo.add(&d)).as_ref() == Ok(hi),
            show,
        );
        laws[6]
            .1
            .record(a.to_string().parse::<Ordinal>().as_ref() == Ok(&a), show);
    }
    let mut out: Vec<PropertyResult> = laws.into_iter().map(|(_, r)| r).collect();

    let grid = ordinals_below_omega_cubed(2);
    let mut hess = PropertyResult::new(s, "hess_prod closed form = recursion below w^3");
    let mut hsup = PropertyResult::new(s, "h_sup_product closed form = recursion below w^3");
    for a in &grid {
        for b in &grid {
            let expected = hess_prod_by_recursion(a, b);
            hess.record(expected.as_ref() == Ok(&a.hess_prod(b)), || {
                format!("{a} (.) {b}: {expected:?}")
            });
            if !a.is_zero() && !b.is_zero() {
                let expected = h_sup_product_by_recursion(a, b);
                hsup.record(expected == a.h_sup_product(b).map_err(|e| e.to_string()), || {
                    format!("{a}, {b}: {expected:?}")
                });
            }
        }
    }
    out.push(hess);
    out.push(hsup);
    out
}

fn bounded_by_o(t: &InvariantTuple) -> bool {
    let o = t.order_type();
    [&t.h, &t.w, &t.sot]
        .iter()
        .all(|v| v.as_known().is_none_or(|x| x <= o))
}

fn relations(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<PropertyResult> {
    let s = Suite::Relations;
    let mut consistency = PropertyResult::new(s, "o(Mr) <= o(Md), w(Mr) <= w(Md), h(Mr) >= h(Md)");
    let mut bounded = PropertyResult::new(s, "h, w, sot <= o when known");
    let mut trace = PropertyResult::new(s, "trace has one record per node");
    let mut kt = PropertyResult::new(s, "o multiplicatively indecomposable and h < o imply w = o");
    let mut fold = PropertyResult::new(s, "rules agree with folded finite subterms");
    let sampler = TermSampler::default();
    for _ in 0..config.samples {
        let t = random_term(rng, &sampler);
        consistency.record(consistency_relations(&t).holds(), || t.to_string());
        let (tuple, records) = evaluate(&t);
        bounded.record(bounded_by_o(&tuple), || t.to_string());
        trace.record(records.len() == t.size(), || t.to_string());
        if let (Some(o), Some(h), Some(w)) = (tuple.o.as_known(), tuple.h.as_known(), tuple.w.as_known()) {
            if o.classify().multiplicatively_indecomposable && h < o {
                kt.record(w == o, || t.to_string());
            }
        }
        let f = random_finite_term(rng, 3, 3);
        fold.record(fold_agrees(&f), || f.to_string());
    }
    vec![consistency, bounded, trace, kt, fold]
}

/// Known rule components must match the folded term, and folded values must
/// respect any bounds the rules recorded.
pub fn fold_agrees(t: &WpoTerm) -> bool {
    let (rules, _) = invariants(t);
    let (folded, _) = invariants(&fold_finite(t));
    let (evaluated, _) = evaluate(t);
    rules
        .components()
        .iter()
        .zip(folded.components().iter())
        .zip(evaluated.components().iter())
        .all(|(((_, r), (_, f)), (_, e))| {
            let folded_ok = match (r.as_known(), f.as_known()) {
                (Some(x), Some(y)) => x == y,
                (Some(_), None) => false,
                (None, Some(y)) => r.admits(y),
                (None, None) => true,
            };
            let evaluated_ok = match f.as_known() {
                Some(y) => e.as_known() == Some(y),
                None => true,
            };
            folded_ok && evaluated_ok
        })
}
