use super::{PosetLeaf, WpoTerm};
use crate::poset::{Composition, FinitePoset};

/// Largest explicit poset produced by folding. Matches the guard of the
/// safe-subset search, so folded leaves always evaluate completely.
pub const FOLD_GUARD: usize = 20;

/// The explicit poset of a finite leaf, if it fits under [`FOLD_GUARD`].
pub(crate) fn explicit_leaf(t: &WpoTerm) -> Option<FinitePoset> {
    let fits = |n: usize| n <= FOLD_GUARD;
    match t {
        WpoTerm::Ordinal(a) => {
            let n = usize::try_from(a.as_finite()?).ok().filter(|&n| fits(n))?;
            Some(FinitePoset::chain(n))
        }
        WpoTerm::Gamma(k) => fits(*k).then(|| FinitePoset::antichain(*k)),
        WpoTerm::Poset(leaf) => fits(leaf.poset.len()).then(|| leaf.poset.clone()),
        _ => None,
    }
}

/// Replaces every maximal subterm built from finite leaves by the four
/// compositions with one explicit poset leaf. Leaves standing alone, and
/// subterms whose poset would exceed [`FOLD_GUARD`], are left as they are.
pub fn fold_finite(t: &WpoTerm) -> WpoTerm {
    fold(t).0
}

fn fold(t: &WpoTerm) -> (WpoTerm, Option<FinitePoset>) {
    match t {
        WpoTerm::Binary { op, left, right } => {
            let (l, lp) = fold(left);
            let (r, rp) = fold(right);
            if let (Some(a), Some(b)) = (lp, rp) {
                let size = match op {
                    Composition::DisjointSum | Composition::LexSum => a.len() + b.len(),
                    _ => a.len() * b.len(),
                };
                if size <= FOLD_GUARD {
                    let p = FinitePoset::compose(*op, &a, &b);
                    let leaf = WpoTerm::Poset(PosetLeaf {
                        poset: p.clone(),
                        source: None,
                    });
                    return (leaf, Some(p));
                }
            }
            (WpoTerm::binary(*op, l, r), None)
        }
        WpoTerm::Multiset { kind, child } => (
            WpoTerm::Multiset {
                kind: *kind,
                child: Box::new(fold(child).0),
            },
            None,
        ),
        leaf => (leaf.clone(), explicit_leaf(leaf)),
    }
}
