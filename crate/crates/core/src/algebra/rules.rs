use std::fmt;

use super::fold::{explicit_leaf, FOLD_GUARD};
use super::value::{InvariantTuple, InvariantValue};
use super::{MultisetKind, WpoTerm};
use crate::oracle::{sot_fast, SOT_FAST_GUARD};
use crate::ordinal::Ordinal;
use crate::poset::{Composition, FinitePoset};

/// Rule applied at a node; [`Rule::key`] is the citation key shown in traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Ordinal,
    FinitePoset,
    Antichain,
    H,
    DisjointSum,
    LexSum,
    CartesianProduct,
    LexProduct,
    MultisetEmbedding,
    MultisetOrdering,
}

impl Rule {
    pub const ALL: [Rule; 10] = [
        Rule::Ordinal,
        Rule::FinitePoset,
        Rule::Antichain,
        Rule::H,
        Rule::DisjointSum,
        Rule::LexSum,
        Rule::CartesianProduct,
        Rule::LexProduct,
        Rule::MultisetEmbedding,
        Rule::MultisetOrdering,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Rule::Ordinal => "ordinal",
            Rule::FinitePoset => "finite-poset",
            Rule::Antichain => "antichain",
            Rule::H => "H",
            Rule::DisjointSum => "disjoint-sum",
            Rule::LexSum => "lex-sum",
            Rule::CartesianProduct => "cartesian-product",
            Rule::LexProduct => "lex-product",
            Rule::MultisetEmbedding => "multiset-embedding",
            Rule::MultisetOrdering => "multiset-ordering",
        }
    }

    fn of_composition(op: Composition) -> Rule {
        match op {
            Composition::DisjointSum => Rule::DisjointSum,
            Composition::LexSum => Rule::LexSum,
            Composition::Cartesian => Rule::CartesianProduct,
            Composition::LexProduct => Rule::LexProduct,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    /// The subterm, in query syntax.
    pub node: String,
    pub depth: usize,
    pub rule: Rule,
    /// Which special case of the rule fired, if any.
    pub detail: Option<String>,
    pub tuple: InvariantTuple,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", "  ".repeat(self.depth), self.rule)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        write!(f, "] {} => {}", self.node, self.tuple)
    }
}

/// Rule-only evaluation. The trace lists every node once, in post-order.
pub fn invariants(t: &WpoTerm) -> (InvariantTuple, Vec<TraceRecord>) {
    let mut trace = Vec::new();
    let (tuple, _) = eval(t, 0, false, &mut trace);
    (tuple, trace)
}

/// Rule evaluation with finite subterms folded into explicit posets and
/// measured directly. Folding only ever replaces unknown components.
pub fn evaluate(t: &WpoTerm) -> (InvariantTuple, Vec<TraceRecord>) {
    let mut trace = Vec::new();
    let (tuple, _) = eval(t, 0, true, &mut trace);
    (tuple, trace)
}

fn ord(n: usize) -> Ordinal {
    Ordinal::from(n as u64)
}

fn zero_tuple() -> InvariantTuple {
    InvariantTuple::finite(0, 0, 0, 0)
}

/// Invariants of an explicit finite poset.
pub(crate) fn poset_tuple(p: &FinitePoset) -> InvariantTuple {
    let sot = match sot_fast(p) {
        Ok(v) => InvariantValue::known(ord(v)),
        Err(_) => {
            let s = p.stripped_indices().len();
            InvariantValue::bounded(
                format!("safe-subset search exceeds the guard of {SOT_FAST_GUARD} elements"),
                Some(ord(s).delta_bound()),
                Some(ord(s)),
            )
        }
    };
    InvariantTuple {
        o: InvariantValue::known(ord(p.len())),
        h: InvariantValue::known(ord(p.longest_chain().0)),
        w: InvariantValue::known(ord(p.widest_antichain().0)),
        sot,
    }
}

fn eval(
    t: &WpoTerm,
    depth: usize,
    fold: bool,
    trace: &mut Vec<TraceRecord>,
) -> (InvariantTuple, Option<FinitePoset>) {
    let (tuple, rule, detail, explicit) = match t {
        WpoTerm::Ordinal(a) => {
            let w = if a.is_zero() { 0u64 } else { 1 };
            let tuple = InvariantTuple::known(a.clone(), a.clone(), w.into(), Ordinal::zero());
            (tuple, Rule::Ordinal, None, fold.then(|| explicit_leaf(t)).flatten())
        }
        WpoTerm::Gamma(k) => {
            let tuple = match *k {
                0 => zero_tuple(),
                k => InvariantTuple::known(ord(k), 1u64.into(), ord(k), ord(k - 1)),
            };
            (tuple, Rule::Antichain, None, fold.then(|| explicit_leaf(t)).flatten())
        }
        WpoTerm::H => {
            let w = Ordinal::omega();
            let tuple = InvariantTuple::known(w.clone(), w.clone(), w.clone(), w);
            (tuple, Rule::H, None, None)
        }
        WpoTerm::Poset(leaf) => (
            poset_tuple(&leaf.poset),
            Rule::FinitePoset,
            None,
            fold.then(|| explicit_leaf(t)).flatten(),
        ),
        WpoTerm::Binary { op, left, right } => {
            let (l, lp) = eval(left, depth + 1, fold, trace);
            let (r, rp) = eval(right, depth + 1, fold, trace);
            let (mut tuple, mut detail) = binary_rule(*op, left, right, &l, &r);
            let explicit = match (lp, rp) {
                (Some(a), Some(b)) if composed_size(*op, &a, &b) <= FOLD_GUARD => {
                    Some(FinitePoset::compose(*op, &a, &b))
                }
                _ => None,
            };
            if let Some(p) = &explicit {
                let folded = poset_tuple(p);
                let mut replaced = false;
                for (slot, value) in [
                    (&mut tuple.o, folded.o),
                    (&mut tuple.h, folded.h),
                    (&mut tuple.w, folded.w),
                    (&mut tuple.sot, folded.sot),
                ] {
                    if !slot.is_known() && value.is_known() {
                        *slot = value;
                        replaced = true;
                    }
                }
                if replaced {
                    let note = format!("folded to a {}-element poset", p.len());
                    detail = Some(match detail {
                        Some(d) => format!("{d}; {note}"),
                        None => note,
                    });
                }
            }
            (tuple, Rule::of_composition(*op), detail, explicit)
        }
        WpoTerm::Multiset { kind, child } => {
            let (c, _) = eval(child, depth + 1, fold, trace);
            let (tuple, detail) = multiset_rule(*kind, &c);
            let rule = match kind {
                MultisetKind::Embedding => Rule::MultisetEmbedding,
                MultisetKind::Ordering => Rule::MultisetOrdering,
            };
            (tuple, rule, detail.map(str::to_string), None)
        }
    };
    trace.push(TraceRecord {
        node: t.to_string(),
        depth,
        rule,
        detail,
        tuple: tuple.clone(),
    });
    (tuple, explicit)
}

fn composed_size(op: Composition, a: &FinitePoset, b: &FinitePoset) -> usize {
    match op {
        Composition::DisjointSum | Composition::LexSum => a.len() + b.len(),
        _ => a.len() * b.len(),
    }
}

/// `k` when `t` is a cartesian product of `k` copies of the ordinal `ω`.
fn omega_factors(t: &WpoTerm) -> Option<usize> {
    match t {
        WpoTerm::Ordinal(a) if *a == Ordinal::omega() => Some(1),
        WpoTerm::Binary {
            op: Composition::Cartesian,
            left,
            right,
        } => Some(omega_factors(left)? + omega_factors(right)?),
        _ => None,
    }
}

fn is_linear(t: &InvariantTuple) -> bool {
    t.sot.as_known().is_some_and(Ordinal::is_zero)
}

fn h_sup(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.h_sup_product(b).unwrap_or_else(|_| Ordinal::zero())
}

fn minus_one(a: &Ordinal) -> Ordinal {
    a.left_subtract(&Ordinal::one()).expect("a >= 1")
}

fn binary_rule(
    op: Composition,
    left: &WpoTerm,
    right: &WpoTerm,
    l: &InvariantTuple,
    r: &InvariantTuple,
) -> (InvariantTuple, Option<String>) {
    let (ol, or) = (l.order_type(), r.order_type());
    let key = Rule::of_composition(op).key();
    let empty = |side: &str| Some(format!("{side} operand empty"));
    match op {
        Composition::DisjointSum | Composition::LexSum => {
            if ol.is_zero() {
                return (r.clone(), empty("left"));
            }
            if or.is_zero() {
                return (l.clone(), empty("right"));
            }
        }
        Composition::Cartesian | Composition::LexProduct => {
            if ol.is_zero() || or.is_zero() {
                return (zero_tuple(), Some("empty factor".to_string()));
            }
            if *ol == Ordinal::one() {
                return (r.clone(), Some("left factor is a singleton".to_string()));
            }
            if *or == Ordinal::one() {
                return (l.clone(), Some("right factor is a singleton".to_string()));
            }
        }
    }
    match op {
        Composition::DisjointSum => {
            let sot = Ordinal::one().add(&minus_one(ol).nat_sum(&minus_one(or)));
            let tuple = InvariantTuple {
                o: InvariantValue::Known(ol.nat_sum(or)),
                h: l.h.map2(&r.h, key, |a, b| a.max(b).clone()),
                w: l.w.map2(&r.w, key, Ordinal::nat_sum),
                sot: InvariantValue::Known(sot),
            };
            (tuple, None)
        }
        Composition::LexSum => {
            let tuple = InvariantTuple {
                o: InvariantValue::Known(ol.add(or)),
                h: l.h.map2(&r.h, key, Ordinal::add),
                w: l.w.map2(&r.w, key, |a, b| a.max(b).clone()),
                sot: l.sot.map2(&r.sot, key, Ordinal::add),
            };
            (tuple, None)
        }
        Composition::Cartesian => {
            let (w, detail) = match omega_factors(left).zip(omega_factors(right)) {
                Some((a, b)) => {
                    let k = a + b;
                    (
                        InvariantValue::Known(Ordinal::omega_power(&ord(k - 1))),
                        Some(format!("product of {k} copies of w")),
                    )
                }
                None => (
                    InvariantValue::unknown("width of cartesian product not functional"),
                    None,
                ),
            };
            let lower = match (l.sot.lower(), r.sot.lower()) {
                (Some(a), Some(b)) => Some(a.max(b).clone()),
                _ => None,
            };
            let tuple = InvariantTuple {
                o: InvariantValue::Known(ol.nat_prod(or)),
                h: l.h.map2(&r.h, key, h_sup),
                w,
                sot: InvariantValue::bounded(
                    "safe order type of cartesian product is only bounded below",
                    lower,
                    None,
                ),
            };
            (tuple, detail)
        }
        Composition::LexProduct => {
            let o = ol.multiply(or);
            let w = l.w.map2(&r.w, key, Ordinal::hess_prod);
            if is_linear(l) && is_linear(r) {
                let tuple = InvariantTuple {
                    h: InvariantValue::Known(o.clone()),
                    o: InvariantValue::Known(o),
                    w,
                    sot: InvariantValue::known(0u64),
                };
                return (tuple, Some("both factors linear".to_string()));
            }
            let tuple = InvariantTuple {
                o: InvariantValue::Known(o),
                h: InvariantValue::unknown("height of lexicographic product has no rule"),
                w,
                sot: InvariantValue::unknown("safe order type of lexicographic product has no rule"),
            };
            (tuple, None)
        }
    }
}

fn multiset_rule(kind: MultisetKind, c: &InvariantTuple) -> (InvariantTuple, Option<&'static str>) {
    let oc = c.order_type();
    if oc.is_zero() {
        // M(∅) = {∅}
        return (InvariantTuple::finite(1, 1, 1, 0), Some("empty child"));
    }
    match kind {
        MultisetKind::Embedding => {
            let hat = oc.hat();
            let sot = if *oc == Ordinal::one() {
                InvariantValue::known(0u64)
            } else {
                InvariantValue::unknown("safe order type of multiset embedding has no rule")
            };
            let tuple = InvariantTuple {
                o: InvariantValue::Known(Ordinal::omega_power(&hat)),
                h: c.h.map(Rule::MultisetEmbedding.key(), Ordinal::h_star),
                w: InvariantValue::Known(Ordinal::omega_power(&minus_one(&hat))),
                sot,
            };
            let detail = (*oc == Ordinal::one()).then_some("singleton child");
            (tuple, detail)
        }
        MultisetKind::Ordering => {
            let key = Rule::MultisetOrdering.key();
            let linear = is_linear(c);
            let tuple = InvariantTuple {
                o: InvariantValue::Known(Ordinal::omega_power(oc)),
                h: c.h.map(key, Ordinal::omega_power),
                w: c.sot.map(key, Ordinal::omega_power),
                sot: if linear {
                    InvariantValue::known(0u64)
                } else {
                    InvariantValue::unknown("safe order type of multiset ordering has no rule")
                },
            };
            (tuple, linear.then_some("linear child"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn w_of(t: &WpoTerm) -> InvariantValue {
        invariants(t).0.w
    }

    #[test]
    fn multiset_ordering_of_h_sums() {
        let t = WpoTerm::multiset_ord(WpoTerm::lex_sum(WpoTerm::H, WpoTerm::H));
        assert_eq!(w_of(&t), InvariantValue::Known(o("w^(w*2)")));
        let t = WpoTerm::multiset_ord(WpoTerm::lex_sum(WpoTerm::H, WpoTerm::ordinal(o("w"))));
        assert_eq!(w_of(&t), InvariantValue::Known(o("w^w")));
    }

    #[test]
    fn multiset_examples() {
        let (t, _) = invariants(&WpoTerm::multiset_emb(WpoTerm::Gamma(3)));
        assert_eq!((t.o, t.h, t.w), (
            InvariantValue::Known(o("w^3")),
            InvariantValue::Known(o("w")),
            InvariantValue::Known(o("w^2"))
        ));
        let (t, _) = invariants(&WpoTerm::multiset_ord(WpoTerm::ordinal(o("w^2"))));
        assert_eq!(t, InvariantTuple::known(o("w^(w^2)"), o("w^(w^2)"), o("1"), o("0")));
        let (t, _) = invariants(&WpoTerm::multiset_ord(WpoTerm::Gamma(0)));
        assert_eq!(t, InvariantTuple::finite(1, 1, 1, 0));
        let (t, _) = invariants(&WpoTerm::multiset_emb(WpoTerm::Gamma(0)));
        assert_eq!(t, InvariantTuple::finite(1, 1, 1, 0));
    }

    #[test]
    fn cartesian_of_antichains_folds() {
        let t = WpoTerm::cartesian(WpoTerm::Gamma(2), WpoTerm::Gamma(2));
        let (rules, _) = invariants(&t);
        assert!(!rules.w.is_known());
        let (folded, trace) = evaluate(&t);
        assert_eq!(folded, InvariantTuple::finite(4, 1, 4, 3));
        assert!(trace.last().unwrap().detail.as_deref().unwrap().contains("folded"));
    }

    #[test]
    fn cartesian_width_is_unknown_with_reason() {
        let t = WpoTerm::cartesian(WpoTerm::Gamma(2), WpoTerm::H);
        match evaluate(&t).0.w {
            InvariantValue::Unknown(u) => {
                assert_eq!(u.reason, "width of cartesian product not functional")
            }
            v => panic!("{v}"),
        }
    }

    #[test]
    fn omega_power_products() {
        let w = || WpoTerm::ordinal(Ordinal::omega());
        let t = WpoTerm::cartesian(WpoTerm::cartesian(w(), w()), w());
        assert_eq!(w_of(&t), InvariantValue::Known(o("w^2")));
    }

    #[test]
    fn unknown_reasons_chain_and_bounds_propagate() {
        let t = WpoTerm::multiset_ord(WpoTerm::cartesian(WpoTerm::Gamma(2), WpoTerm::H));
        match w_of(&t) {
            InvariantValue::Unknown(u) => {
                assert!(u.reason.contains("[via multiset-ordering]"), "{}", u.reason);
                // lower bound max(1, ω) for the product's sot, raised to ω^ω
                assert_eq!(u.lower, Some(o("w^w")));
                assert_eq!(u.upper, None);
            }
            v => panic!("{v}"),
        }
    }

    #[test]
    fn trace_is_post_order_with_one_record_per_node() {
        let t = WpoTerm::multiset_ord(WpoTerm::lex_sum(WpoTerm::H, WpoTerm::Gamma(2)));
        let (_, trace) = invariants(&t);
        assert_eq!(trace.len(), t.size());
        let keys: Vec<&str> = trace.iter().map(|r| r.rule.key()).collect();
        assert_eq!(keys, ["H", "antichain", "lex-sum", "multiset-ordering"]);
        assert_eq!(trace[3].depth, 0);
    }

    #[test]
    fn sums_with_empty_operands() {
        let t = WpoTerm::disjoint_sum(WpoTerm::Gamma(0), WpoTerm::Gamma(3));
        assert_eq!(invariants(&t).0, InvariantTuple::finite(3, 1, 3, 2));
        let t = WpoTerm::disjoint_sum(WpoTerm::ordinal(o("2")), WpoTerm::ordinal(o("2")));
        assert_eq!(invariants(&t).0.sot, InvariantValue::known(3u64));
    }
}
