//! Compositional evaluation of `o`, `h`, `w` and the maximal safe order type.
//!
//! Terms are built from ordinals, explicit finite posets, antichains `Γ_k`,
//! the ω-indexed sum `H = Σ_n Γ_n`, the four binary compositions and the two
//! multiset constructions. Where no formula is available the engine returns
//! [`InvariantValue::Unknown`] with a reason and, when sound, bounds.

mod fold;
mod generate;
mod relations;
mod rules;
mod value;

use std::fmt;

use crate::ordinal::Ordinal;
use crate::poset::{Composition, FinitePoset};

pub use fold::{fold_finite, FOLD_GUARD};
pub use generate::{random_finite_term, random_term, TermSampler};
pub use relations::{consistency_relations, RelationCheck, RelationStatus, RelationsReport};
pub use rules::{evaluate, invariants, Rule, TraceRecord};
pub use value::{InvariantTuple, InvariantValue, Unknown};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MultisetKind {
    /// `M^◇`, ordered by multiset embedding.
    Embedding,
    /// `M^r`, ordered by the multiset ordering.
    Ordering,
}

/// An explicit finite poset leaf, with the file it was read from if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetLeaf {
    pub poset: FinitePoset,
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WpoTerm {
    Ordinal(Ordinal),
    Poset(PosetLeaf),
    Gamma(usize),
    H,
    Binary {
        op: Composition,
        left: Box<WpoTerm>,
        right: Box<WpoTerm>,
    },
    Multiset {
        kind: MultisetKind,
        child: Box<WpoTerm>,
    },
}

impl WpoTerm {
    pub fn ordinal(o: Ordinal) -> WpoTerm {
        WpoTerm::Ordinal(o)
    }

    pub fn poset(poset: FinitePoset) -> WpoTerm {
        WpoTerm::Poset(PosetLeaf {
            poset,
            source: None,
        })
    }

    pub fn binary(op: Composition, left: WpoTerm, right: WpoTerm) -> WpoTerm {
        WpoTerm::Binary {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn disjoint_sum(left: WpoTerm, right: WpoTerm) -> WpoTerm {
        WpoTerm::binary(Composition::DisjointSum, left, right)
    }

    pub fn lex_sum(left: WpoTerm, right: WpoTerm) -> WpoTerm {
        WpoTerm::binary(Composition::LexSum, left, right)
    }

    pub fn cartesian(left: WpoTerm, right: WpoTerm) -> WpoTerm {
        WpoTerm::binary(Composition::Cartesian, left, right)
    }

    pub fn lex_product(left: WpoTerm, right: WpoTerm) -> WpoTerm {
        WpoTerm::binary(Composition::LexProduct, left, right)
    }

    pub fn multiset_emb(child: WpoTerm) -> WpoTerm {
        WpoTerm::Multiset {
            kind: MultisetKind::Embedding,
            child: Box::new(child),
        }
    }

    pub fn multiset_ord(child: WpoTerm) -> WpoTerm {
        WpoTerm::Multiset {
            kind: MultisetKind::Ordering,
            child: Box::new(child),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            WpoTerm::Binary { left, right, .. } => 1 + left.size() + right.size(),
            WpoTerm::Multiset { child, .. } => 1 + child.size(),
            _ => 1,
        }
    }

    pub fn children(&self) -> Vec<&WpoTerm> {
        match self {
            WpoTerm::Binary { left, right, .. } => vec![left, right],
            WpoTerm::Multiset { child, .. } => vec![child],
            _ => Vec::new(),
        }
    }

    // 1: +, 2: U, 3: x and ., 4: atoms
    fn precedence(&self) -> u8 {
        match self {
            WpoTerm::Ordinal(o) if o.terms().len() > 1 => 1,
            WpoTerm::Binary { op, .. } => match op {
                Composition::LexSum => 1,
                Composition::DisjointSum => 2,
                Composition::Cartesian | Composition::LexProduct => 3,
            },
            _ => 4,
        }
    }
}

pub(crate) fn operator_symbol(op: Composition) -> &'static str {
    match op {
        Composition::DisjointSum => "U",
        Composition::LexSum => "+",
        Composition::Cartesian => "x",
        Composition::LexProduct => ".",
    }
}

struct Wrapped<'a>(&'a WpoTerm, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints in the query syntax, with the parentheses the grammar requires.
impl fmt::Display for WpoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WpoTerm::Ordinal(o) => write!(f, "{o}"),
            WpoTerm::Poset(leaf) => match &leaf.source {
                Some(path) => write!(f, "poset:{path}"),
                None => write!(f, "poset{}", leaf.poset),
            },
            WpoTerm::Gamma(k) => write!(f, "Gamma({k})"),
            WpoTerm::H => f.write_str("H"),
            WpoTerm::Multiset { kind, child } => {
                let name = match kind {
                    MultisetKind::Embedding => "Md",
                    MultisetKind::Ordering => "Mr",
                };
                write!(f, "{name}({child})")
            }
            WpoTerm::Binary { op, left, right } => {
                let own = self.precedence();
                let wrap_left = left.precedence() < own
                    || (own == 3 && matches!(**left, WpoTerm::Binary { op: o, .. } if o != *op));
                let wrap_right = right.precedence() <= own;
                write!(
                    f,
                    "{} {} {}",
                    Wrapped(left, wrap_left),
                    operator_symbol(*op),
                    Wrapped(right, wrap_right)
                )
            }
        }
    }
}
