use std::collections::HashMap;

use super::{guard, OracleError, RANK_GUARD};
use crate::poset::FinitePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankInvariants {
    pub o: usize,
    pub h: usize,
    pub w: usize,
}

#[derive(Clone, Copy)]
enum Rank {
    O,
    H,
    W,
}

struct Ranks<'a> {
    poset: &'a FinitePoset,
    memo: [HashMap<u32, usize>; 3],
}

impl Ranks<'_> {
    // rank of the substructure on `set`, by the residual equation for `kind`
    fn rank(&mut self, kind: Rank, set: u32) -> usize {
        if set == 0 {
            return 0;
        }
        if let Some(&r) = self.memo[kind as usize].get(&set) {
            return r;
        }
        let p = self.poset;
        let n = p.len();
        let mut best = 0;
        for x in (0..n).filter(|&x| set >> x & 1 == 1) {
            let residual = (0..n)
                .filter(|&y| set >> y & 1 == 1)
                .filter(|&y| match kind {
                    Rank::O => !p.le(x, y),
                    Rank::H => p.lt(y, x),
                    Rank::W => p.incomparable(x, y),
                })
                .fold(0u32, |acc, y| acc | 1 << y);
            best = best.max(self.rank(kind, residual) + 1);
        }
        self.memo[kind as usize].insert(set, best);
        best
    }
}

/// `(o, h, w)` of a finite poset from the residual equations
/// `o(X) = sup (o(X_{≱x}) + 1)`, `h(X) = sup (h(X_{<x}) + 1)`,
/// `w(X) = sup (w(X_{⊥x}) + 1)`.
///
/// Before returning, checks the values against `|X|`, the longest chain and
/// the widest antichain.
pub fn rank_invariants(poset: &FinitePoset) -> Result<RankInvariants, OracleError> {
    rank_invariants_guarded(poset, RANK_GUARD)
}

pub fn rank_invariants_guarded(
    poset: &FinitePoset,
    limit: usize,
) -> Result<RankInvariants, OracleError> {
    guard(poset.len(), limit.min(31))?;
    let mut ranks = Ranks {
        poset,
        memo: Default::default(),
    };
    let all = if poset.is_empty() {
        0
    } else {
        u32::MAX >> (32 - poset.len())
    };
    let r = RankInvariants {
        o: ranks.rank(Rank::O, all),
        h: ranks.rank(Rank::H, all),
        w: ranks.rank(Rank::W, all),
    };
    let direct = RankInvariants {
        o: poset.len(),
        h: poset.longest_chain().0,
        w: poset.widest_antichain().0,
    };
    if r != direct {
        return Err(OracleError::Inconsistent {
            poset: poset.to_string(),
            detail: format!("residual ranks {r:?}, direct {direct:?}"),
        });
    }
    Ok(r)
}

/// `|X| <= h(X) * w(X)`.
pub fn check_height_width(poset: &FinitePoset) -> Result<bool, OracleError> {
    let r = rank_invariants(poset)?;
    Ok(r.o <= r.h * r.w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g3 = rank_invariants(&FinitePoset::antichain(3)).unwrap();
        assert_eq!((g3.o, g3.h, g3.w), (3, 1, 3));
        let c4 = rank_invariants(&FinitePoset::chain(4)).unwrap();
        assert_eq!((c4.o, c4.h, c4.w), (4, 4, 1));
        let n = FinitePoset::from_relations(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let r = rank_invariants(&n).unwrap();
        assert_eq!((r.o, r.h, r.w), (4, 2, 2));
        assert!(check_height_width(&n).unwrap());
        let e = rank_invariants(&FinitePoset::empty()).unwrap();
        assert_eq!((e.o, e.h, e.w), (0, 0, 0));
    }

    #[test]
    fn guard_applies() {
        assert!(matches!(
            rank_invariants(&FinitePoset::antichain(10)),
            Err(OracleError::GuardExceeded { size: 10, guard: 9 })
        ));
    }
}
