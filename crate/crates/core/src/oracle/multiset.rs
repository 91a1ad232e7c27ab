use std::collections::BTreeMap;
use std::fmt;

use super::OracleError;
use crate::matching::maximum_matching;
use crate::ordinal::{Exponent, Ordinal};
use crate::poset::FinitePoset;

/// A finite multiset of poset elements, by index.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
}

impl Multiset {
    pub fn empty() -> Multiset {
        Multiset::default()
    }

    pub fn from_elements(elements: &[usize]) -> Multiset {
        let mut m = Multiset::empty();
        for &x in elements {
            m.insert(x, 1);
        }
        m
    }

    pub fn insert(&mut self, element: usize, copies: usize) {
        if copies > 0 {
            *self.counts.entry(element).or_default() += copies;
        }
    }

    pub fn multiplicity(&self, element: usize) -> usize {
        self.counts.get(&element).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&x, &c)| (x, c))
    }

    /// Elements with repetition, in increasing index order.
    pub fn elements(&self) -> Vec<usize> {
        self.support()
            .flat_map(|(x, c)| std::iter::repeat_n(x, c))
            .collect()
    }

    /// `m ∩ m'`: pointwise minimum.
    pub fn intersection(&self, other: &Multiset) -> Multiset {
        let mut m = Multiset::empty();
        for (x, c) in self.support() {
            m.insert(x, c.min(other.multiplicity(x)));
        }
        m
    }

    /// `m ∖ m'`: truncated pointwise difference.
    pub fn difference(&self, other: &Multiset) -> Multiset {
        let mut m = Multiset::empty();
        for (x, c) in self.support() {
            m.insert(x, c.saturating_sub(other.multiplicity(x)));
        }
        m
    }

    /// Splits at `boundary`: elements below it, and the rest shifted down.
    pub fn split(&self, boundary: usize) -> (Multiset, Multiset) {
        let (mut low, mut high) = (Multiset::empty(), Multiset::empty());
        for (x, c) in self.support() {
            if x < boundary {
                low.insert(x, c);
            } else {
                high.insert(x - boundary, c);
            }
        }
        (low, high)
    }

    pub fn labeled<'a>(&'a self, poset: &'a FinitePoset) -> LabeledMultiset<'a> {
        LabeledMultiset {
            multiset: self,
            poset,
        }
    }

    fn check(&self, poset: &FinitePoset) -> Result<(), OracleError> {
        match self.counts.keys().find(|&&x| x >= poset.len()) {
            Some(&element) => Err(OracleError::ForeignElement {
                element,
                size: poset.len(),
            }),
            None => Ok(()),
        }
    }
}

pub struct LabeledMultiset<'a> {
    multiset: &'a Multiset,
    poset: &'a FinitePoset,
}

impl fmt::Display for LabeledMultiset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .multiset
            .elements()
            .into_iter()
            .map(|x| self.poset.label(x))
            .collect();
        write!(f, "[{}]", names.join(", "))
    }
}

/// `m ≤_◇ m'`: some injection sends every element of `m` to one above it in `m'`.
pub fn leq_emb(poset: &FinitePoset, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
    m.check(poset)?;
    m2.check(poset)?;
    if m.size() > m2.size() {
        return Ok(false);
    }
    let right = m2.elements();
    let adjacency: Vec<Vec<usize>> = m
        .elements()
        .into_iter()
        .map(|x| (0..right.len()).filter(|&j| poset.le(x, right[j])).collect())
        .collect();
    Ok(maximum_matching(&adjacency, right.len()).size() == adjacency.len())
}

/// `m ≤_r m'`: after cancelling `m ∩ m'`, every leftover of `m` lies strictly
/// below some leftover of `m'`.
pub fn leq_r(poset: &FinitePoset, m: &Multiset, m2: &Multiset) -> Result<bool, OracleError> {
    m.check(poset)?;
    m2.check(poset)?;
    let common = m.intersection(m2);
    let left = m.difference(&common);
    let right = m2.difference(&common);
    let dominated = left
        .support()
        .all(|(x, _)| right.support().any(|(y, _)| poset.lt(x, y)));
    Ok(dominated)
}

/// All multisets over `poset` of total size at most `k`, each once.
pub fn enumerate_multisets(poset: &FinitePoset, k: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut current = Multiset::empty();
    fill(poset.len(), 0, k, &mut current, &mut out);
    out
}

fn fill(n: usize, element: usize, budget: usize, current: &mut Multiset, out: &mut Vec<Multiset>) {
    if element == n {
        out.push(current.clone());
        return;
    }
    for copies in 0..=budget {
        let mut next = current.clone();
        next.insert(element, copies);
        fill(n, element + 1, budget - copies, &mut next, out);
    }
}

/// `Σ_i ω^i · m(i)` for a multiset over the chain `0 < 1 < … < n-1`.
pub fn chain_multiset_ordinal(n: usize, m: &Multiset) -> Result<Ordinal, OracleError> {
    m.check(&FinitePoset::chain(n))?;
    let mut out = Ordinal::zero();
    for (i, c) in m.support().collect::<Vec<_>>().into_iter().rev() {
        let term = Ordinal::monomial(Exponent::from_ordinal(Ordinal::from(i as u64)), c as u64);
        out = out.add(&term);
    }
    Ok(out)
}
