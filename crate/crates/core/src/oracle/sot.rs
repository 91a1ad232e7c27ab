//! Maximal safe order type of a finite poset.
//!
//! A linearisation `x_1, …, x_m` of a subset `X' ⊆ X` is safe when for every
//! position `i` and every nonempty set `T` of later elements,
//! `(X_{≱T})_{⊥x_i}` is nonempty; every element must also have a nonempty
//! `X_{⊥x}`, which is the `T = ∅` case and amounts to `X' ⊆ str(X)`.
//! Residuals shrink as `T` grows, so only `T` = everything after `x_i` matters.

use super::{guard, OracleError, SOT_GUARD};
use crate::ordinal::Ordinal;
use crate::poset::{FinitePoset, ResidualKind};

/// Default guard for [`sot_fast`].
pub const SOT_FAST_GUARD: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafeSubsetWitness {
    /// Subset elements, increasing by index.
    pub subset: Vec<usize>,
    /// A safe linearisation of the subset.
    pub linearisation: Vec<usize>,
    /// Safety constraints verified for this witness.
    pub checked_tuples: usize,
}

/// Whether the linearisation is safe, using the largest-tuple reduction.
pub fn is_safe_linearisation(poset: &FinitePoset, order: &[usize]) -> bool {
    let stripped = poset.stripped_indices();
    order.iter().enumerate().all(|(i, &x)| {
        stripped.contains(&x) && {
            let later = &order[i + 1..];
            later.is_empty() || has_witness(poset, x, later)
        }
    })
}

/// Whether the linearisation is safe, checking every nonempty tuple of later
/// elements separately. Exponential; for validating the reduction.
pub fn is_safe_linearisation_literal(poset: &FinitePoset, order: &[usize]) -> bool {
    order.iter().enumerate().all(|(i, &x)| {
        let later = &order[i + 1..];
        let mut ok = poset
            .residual_indices(&ResidualKind::Incomparable(x))
            .map(|r| !r.is_empty())
            .unwrap_or(false);
        for mask in 1u64..(1 << later.len()) {
            let tuple: Vec<usize> = (0..later.len())
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| later[j])
                .collect();
            ok &= has_witness(poset, x, &tuple);
        }
        ok
    })
}

// (X_{≱tuple})_{⊥x} ≠ ∅
fn has_witness(poset: &FinitePoset, x: usize, tuple: &[usize]) -> bool {
    (0..poset.len()).any(|y| poset.incomparable(x, y) && tuple.iter().all(|&t| !poset.le(t, y)))
}

/// Exhaustive search over subsets of `str(X)` and their linear extensions.
pub fn sot_brute_force(poset: &FinitePoset) -> Result<(usize, SafeSubsetWitness), OracleError> {
    sot_brute_force_guarded(poset, SOT_GUARD)
}

pub fn sot_brute_force_guarded(
    poset: &FinitePoset,
    limit: usize,
) -> Result<(usize, SafeSubsetWitness), OracleError> {
    guard(poset.len(), limit.min(16))?;
    let stripped = poset.stripped_indices();
    let s = stripped.len();
    let mut masks: Vec<u32> = (0..1u32 << s).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let subset: Vec<usize> = (0..s)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| stripped[i])
            .collect();
        let induced = poset.induced(&subset);
        for ext in induced.linear_extensions_guarded(usize::MAX)? {
            let order: Vec<usize> = ext.iter().map(|&i| subset[i]).collect();
            if is_safe_linearisation(poset, &order) {
                let witness = SafeSubsetWitness {
                    checked_tuples: order.len(),
                    subset,
                    linearisation: order,
                };
                return Ok((witness.subset.len(), witness));
            }
        }
    }
    unreachable!("the empty subset is always safe")
}

/// Largest safe subset by dynamic programming over suffix sets.
///
/// A set `S` of later elements is reachable when it can be listed safely;
/// prepending `x` keeps it reachable iff `x ∈ str(X)`, nothing in `S` is below
/// `x`, and some `y ⊥ x` is above no element of `S`.
pub fn sot_fast(poset: &FinitePoset) -> Result<usize, OracleError> {
    suffix_dp(poset, true)
}

/// The same search with only nonempty tuples constrained, so that the last
/// element of a linearisation is unconstrained.
pub fn sot_nonempty_reading(poset: &FinitePoset) -> Result<usize, OracleError> {
    suffix_dp(poset, false)
}

fn suffix_dp(poset: &FinitePoset, require_stripped: bool) -> Result<usize, OracleError> {
    let n = poset.len();
    guard(n, SOT_FAST_GUARD)?;
    let bits = |it: &mut dyn Iterator<Item = usize>| it.fold(0u32, |acc, i| acc | 1 << i);
    let up: Vec<u32> = (0..n).map(|s| bits(&mut (0..n).filter(|&y| poset.le(s, y)))).collect();
    let below: Vec<u32> = (0..n).map(|x| bits(&mut (0..n).filter(|&y| poset.lt(y, x)))).collect();
    let inc: Vec<u32> = (0..n)
        .map(|x| bits(&mut (0..n).filter(|&y| poset.incomparable(x, y))))
        .collect();
    let candidates: Vec<usize> = if require_stripped {
        poset.stripped_indices()
    } else {
        (0..n).collect()
    };
    let mut reachable = vec![false; 1 << n];
    let mut up_union = vec![0u32; 1 << n];
    reachable[0] = true;
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        if set != 0 {
            let low = set.trailing_zeros() as usize;
            up_union[set as usize] = up_union[(set & (set - 1)) as usize] | up[low];
        }
        if !reachable[set as usize] {
            continue;
        }
        best = best.max(set.count_ones() as usize);
        for &x in &candidates {
            if set >> x & 1 == 1 || below[x] & set != 0 {
                continue;
            }
            if set != 0 && inc[x] & !up_union[set as usize] == 0 {
                continue;
            }
            reachable[(set | 1 << x) as usize] = true;
        }
    }
    Ok(best)
}

/// `ǫ(X) = max({ǫ(X_{≱x}) + 1 | X_{⊥x} ≠ ∅} ∪ {0})`, both sides by brute force.
pub fn sot_residual_check(poset: &FinitePoset) -> Result<bool, OracleError> {
    let (lhs, _) = sot_brute_force(poset)?;
    let mut rhs = 0;
    for x in poset.stripped_indices() {
        let residual = poset.residual(&ResidualKind::NotGeq(x))?;
        rhs = rhs.max(sot_brute_force(&residual)?.0 + 1);
    }
    Ok(lhs == rhs)
}

/// `δ(|str(X)|) ≤ ǫ(X) ≤ |str(X)|`.
pub fn delta_bound_check(poset: &FinitePoset) -> Result<bool, OracleError> {
    let (value, _) = sot_brute_force(poset)?;
    let s = poset.stripped_indices().len();
    let lower = Ordinal::from(s as u64).delta_bound();
    Ok(lower <= Ordinal::from(value as u64) && value <= s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{all_posets, Composition};

    #[test]
    fn examples() {
        let (v, w) = sot_brute_force(&FinitePoset::chain(4)).unwrap();
        assert_eq!(v, 0);
        assert!(w.subset.is_empty());
        assert_eq!(sot_brute_force(&FinitePoset::antichain(3)).unwrap().0, 2);
        let c2 = FinitePoset::chain(2);
        let sum = FinitePoset::compose(Composition::DisjointSum, &c2, &c2);
        let (v, w) = sot_brute_force(&sum).unwrap();
        assert_eq!(v, 3);
        assert!(is_safe_linearisation_literal(&sum, &w.linearisation));
        assert_eq!(sot_brute_force(&FinitePoset::antichain(4)).unwrap().0, 3);
    }

    #[test]
    fn reduction_matches_literal_condition() {
        for n in 0..=4 {
            for p in all_posets(n) {
                let all: Vec<usize> = (0..n).collect();
                for mask in 0u32..(1 << n) {
                    let subset: Vec<usize> =
                        all.iter().copied().filter(|&i| mask >> i & 1 == 1).collect();
                    let induced = p.induced(&subset);
                    for ext in induced.linear_extensions().unwrap() {
                        let order: Vec<usize> = ext.iter().map(|&i| subset[i]).collect();
                        assert_eq!(
                            is_safe_linearisation(&p, &order),
                            is_safe_linearisation_literal(&p, &order),
                            "{p} {order:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dynamic_programme_matches_brute_force() {
        for n in 0..=4 {
            for p in all_posets(n) {
                assert_eq!(sot_fast(&p).unwrap(), sot_brute_force(&p).unwrap().0, "{p}");
            }
        }
    }

    #[test]
    fn readings_differ_on_chains() {
        assert_eq!(sot_fast(&FinitePoset::chain(3)).unwrap(), 0);
        assert_eq!(sot_nonempty_reading(&FinitePoset::chain(3)).unwrap(), 1);
    }

    #[test]
    fn residual_and_delta_checks() {
        assert!(sot_residual_check(&FinitePoset::chain(5)).unwrap());
        assert!(sot_residual_check(&FinitePoset::antichain(2)).unwrap());
        assert!(delta_bound_check(&FinitePoset::antichain(4)).unwrap());
        assert!(delta_bound_check(&FinitePoset::chain(6)).unwrap());
    }
}
