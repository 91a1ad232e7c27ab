//! Truncated checks of the multiset transformation lemmas.
//!
//! Each lemma relates multisets over a composed poset `A ⊔ B` or `A + B` to
//! pairs `(m_A, m_B)` through the canonical split. Checking all multisets of
//! total size `≤ k` is coherent because the split preserves total size.

use std::fmt;

use super::multiset::{enumerate_multisets, leq_emb, leq_r, Multiset};
use super::OracleError;
use crate::poset::{Composition, FinitePoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `M^◇(A ⊔ B) ≡ M^◇(A) × M^◇(B)`
    EmbSqcup,
    /// `M^r(A ⊔ B) ≡ M^r(A) × M^r(B)`
    RSqcup,
    /// `M^r(A + B) ≡ M^r(A) · M^r(B)`
    RPlus,
    /// `M^◇(A + B) ≤_aug M^◇(A) · M^◇(B)`
    EmbPlusAug,
    /// `M^◇(A + B) ≡ M^◇(A) · M^◇(B)`. False; a negative control.
    EmbPlusIso,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::EmbSqcup,
        LemmaId::RSqcup,
        LemmaId::RPlus,
        LemmaId::EmbPlusAug,
        LemmaId::EmbPlusIso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::EmbSqcup => "emb-sqcup",
            LemmaId::RSqcup => "r-sqcup",
            LemmaId::RPlus => "r-plus",
            LemmaId::EmbPlusAug => "emb-plus-aug",
            LemmaId::EmbPlusIso => "emb-plus-iso",
        }
    }

    fn composition(self) -> Composition {
        match self {
            LemmaId::EmbSqcup | LemmaId::RSqcup => Composition::DisjointSum,
            _ => Composition::LexSum,
        }
    }

    fn embedding(self) -> bool {
        !matches!(self, LemmaId::RSqcup | LemmaId::RPlus)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `≤_◇` comparator used on the composed side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Comparator {
    #[default]
    Correct,
    /// Drops injectivity: every element of `m` just needs something above it
    /// in `m'`. For fault injection.
    NonInjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub a: FinitePoset,
    pub b: FinitePoset,
    pub k: usize,
    pub comparator: Comparator,
    pub verdict: Verdict,
    /// Multisets over the composed poset; only on failure.
    pub counterexample: Option<(Multiset, Multiset)>,
    pub pairs_checked: usize,
}

impl LemmaReport {
    /// Re-evaluates the counterexample; true iff it still violates the lemma.
    pub fn recheck(&self) -> Result<bool, OracleError> {
        let Some((m, m2)) = &self.counterexample else {
            return Ok(false);
        };
        let checker = Checker::new(self.lemma, &self.a, &self.b, self.comparator);
        Ok(!checker.holds(m, m2)?)
    }

    /// Counterexample rendered with the composed poset's labels.
    pub fn describe_counterexample(&self) -> Option<String> {
        let (m, m2) = self.counterexample.as_ref()?;
        let composed = FinitePoset::compose(self.lemma.composition(), &self.a, &self.b);
        Some(format!("{} vs {}", m.labeled(&composed), m2.labeled(&composed)))
    }
}

struct Checker<'a> {
    lemma: LemmaId,
    a: &'a FinitePoset,
    b: &'a FinitePoset,
    composed: FinitePoset,
    comparator: Comparator,
}

impl<'a> Checker<'a> {
    fn new(lemma: LemmaId, a: &'a FinitePoset, b: &'a FinitePoset, comparator: Comparator) -> Self {
        Checker {
            lemma,
            a,
            b,
            composed: FinitePoset::compose(lemma.composition(), a, b),
            comparator,
        }
    }

    fn factor_leq(&self, p: &FinitePoset, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
        if self.lemma.embedding() {
            leq_emb(p, m, m2)
        } else {
            leq_r(p, m, m2)
        }
    }

    fn composed_leq(&self, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
        match (self.lemma.embedding(), self.comparator) {
            (false, _) => leq_r(&self.composed, m, m2),
            (true, Comparator::Correct) => leq_emb(&self.composed, m, m2),
            (true, Comparator::NonInjective) => Ok(m.support().all(|(x, _)| {
                m2.support().any(|(y, _)| self.composed.le(x, y))
            })),
        }
    }

    // order on pairs: componentwise for ⊔, B-major lexicographic for +
    fn pair_leq(&self, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
        let (ma, mb) = m.split(self.a.len());
        let (ma2, mb2) = m2.split(self.a.len());
        match self.lemma.composition() {
            Composition::DisjointSum => {
                Ok(self.factor_leq(self.a, &ma, &ma2)? && self.factor_leq(self.b, &mb, &mb2)?)
            }
            _ => {
                if mb == mb2 {
                    self.factor_leq(self.a, &ma, &ma2)
                } else {
                    self.factor_leq(self.b, &mb, &mb2)
                }
            }
        }
    }

    fn holds(&self, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
        let lhs = self.composed_leq(m, m2)?;
        let rhs = self.pair_leq(m, m2)?;
        Ok(match self.lemma {
            LemmaId::EmbPlusAug => !lhs || rhs,
            _ => lhs == rhs,
        })
    }
}

/// Checks one lemma on all multisets of total size `≤ k` over the composed poset.
///
/// For `≡` lemmas, the canonical split must be a bijection onto pairs with
/// `|m_A| + |m_B| ≤ k` and preserve and reflect the order. For
/// [`LemmaId::EmbPlusAug`] only the forward implication is required.
pub fn check_transformation_lemma(
    lemma: LemmaId,
    a: &FinitePoset,
    b: &FinitePoset,
    k: usize,
    comparator: Comparator,
) -> Result<LemmaReport, OracleError> {
    let checker = Checker::new(lemma, a, b, comparator);
    let composite = enumerate_multisets(&checker.composed, k);
    let pairs_expected: usize = enumerate_multisets(a, k)
        .iter()
        .map(|ma| {
            enumerate_multisets(b, k - ma.size()).len()
        })
        .sum();
    assert_eq!(
        composite.len(),
        pairs_expected,
        "canonical split is not a bijection on the truncation"
    );
    let mut report = LemmaReport {
        lemma,
        a: a.clone(),
        b: b.clone(),
        k,
        comparator,
        verdict: Verdict::Pass,
        counterexample: None,
        pairs_checked: 0,
    };
    for m in &composite {
        for m2 in &composite {
            report.pairs_checked += 1;
            if !checker.holds(m, m2)? {
                report.verdict = Verdict::Fail;
                report.counterexample = Some((m.clone(), m2.clone()));
                return Ok(report);
            }
        }
    }
    Ok(report)
}
