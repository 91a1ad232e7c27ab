//! Recursive oracles for the two closed-form ordinal operations.
//!
//! Both recurse along canonical fundamental sequences. At a limit stage the
//! supremum of the sequence is needed to continue; the candidate supplied by
//! the closed form is accepted only after checking that it is an upper bound
//! of the sequence values, that the sequence does not decrease, and that it is
//! cofinal in the candidate (its first few fundamental-sequence points are all
//! reached, or a successor candidate is attained).

use std::collections::HashMap;

use crate::ordinal::Ordinal;

/// Fundamental-sequence points of the candidate that must be reached.
const COFINAL_POINTS: u64 = 4;
/// How far past a point the sequence may take to reach it.
const COFINAL_SLACK: u64 = 6;

/// Every `ω²·a + ω·b + c` with `a, b, c ≤ max_coefficient`.
pub fn ordinals_below_omega_cubed(max_coefficient: u64) -> Vec<Ordinal> {
    let w = Ordinal::omega();
    let w2 = w.multiply(&w);
    let mut out = Vec::new();
    for a in 0..=max_coefficient {
        for b in 0..=max_coefficient {
            for c in 0..=max_coefficient {
                out.push(
                    w2.multiply(&Ordinal::from(a))
                        .add(&w.multiply(&Ordinal::from(b)))
                        .add(&Ordinal::from(c)),
                );
            }
        }
    }
    out
}

/// Checks that `candidate` is the supremum of `f(limit[i])`.
fn verified_sup(
    limit: &Ordinal,
    candidate: Ordinal,
    mut f: impl FnMut(u64, &Ordinal) -> Result<Ordinal, String>,
) -> Result<Ordinal, String> {
    let steps = COFINAL_POINTS + COFINAL_SLACK;
    let mut values = Vec::with_capacity(steps as usize);
    for i in 1..=steps {
        let point = limit.fundamental_step(i).map_err(|e| e.to_string())?;
        values.push(f(i, &point)?);
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("sequence below {limit} decreases"));
    }
    if let Some(v) = values.iter().find(|v| **v > candidate) {
        return Err(format!("{v} exceeds the candidate supremum {candidate}"));
    }
    if candidate.is_limit() {
        for j in 1..=COFINAL_POINTS {
            let target = candidate.fundamental_step(j).map_err(|e| e.to_string())?;
            let reached = values[..(j + COFINAL_SLACK) as usize]
                .iter()
                .any(|v| *v >= target);
            if !reached {
                return Err(format!(
                    "sequence below {limit} does not reach {target}, so its sup is below {candidate}"
                ));
            }
        }
    } else if !values.contains(&candidate) {
        return Err(format!("successor candidate {candidate} is never attained"));
    }
    Ok(candidate)
}

/// `α ⊙ β` by `α ⊙ 0 = 0`, `α ⊙ (β+1) = (α ⊙ β) ⊕ α`, suprema at limits.
///
/// Returns the recursion's value, or the first stage where the closed form
/// fails as a supremum. Intended for `β < ε_0`.
pub fn hess_prod_by_recursion(a: &Ordinal, b: &Ordinal) -> Result<Ordinal, String> {
    let mut memo = HashMap::new();
    hess(a, b, &mut memo)
}

fn hess(
    a: &Ordinal,
    b: &Ordinal,
    memo: &mut HashMap<Ordinal, Ordinal>,
) -> Result<Ordinal, String> {
    if let Some(v) = memo.get(b) {
        return Ok(v.clone());
    }
    let value = if b.is_zero() {
        Ordinal::zero()
    } else if let Some(pred) = b.predecessor() {
        hess(a, &pred, memo)?.nat_sum(a)
    } else {
        verified_sup(b, a.hess_prod(b), |_, point| hess(a, point, memo))?
    };
    memo.insert(b.clone(), value.clone());
    Ok(value)
}

/// `sup {α ⊕ β + 1 | α < a, β < b}` by recursion.
///
/// A successor argument fixes that coordinate at its predecessor, since `⊕`
/// is strictly monotone; two limits are approached along the diagonal of
/// their fundamental sequences. Finite arguments are brute-forced.
pub fn h_sup_product_by_recursion(a: &Ordinal, b: &Ordinal) -> Result<Ordinal, String> {
    if a.is_zero() || b.is_zero() {
        return Err("empty range".to_string());
    }
    let mut memo = HashMap::new();
    sup_pairs(a, b, &mut memo)
}

fn sup_pairs(
    a: &Ordinal,
    b: &Ordinal,
    memo: &mut HashMap<(Ordinal, Ordinal), Ordinal>,
) -> Result<Ordinal, String> {
    let key = (a.clone(), b.clone());
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let value = match (a.as_finite(), b.as_finite()) {
        (Some(n), Some(m)) => {
            let mut best = 0;
            for x in 0..n {
                for y in 0..m {
                    best = best.max(x + y + 1);
                }
            }
            Ordinal::from(best)
        }
        _ => {
            let candidate = a.h_sup_product(b).map_err(|e| e.to_string())?;
            if let Some(pa) = a.predecessor() {
                sup_with_fixed(&pa, b, candidate)?
            } else if let Some(pb) = b.predecessor() {
                sup_with_fixed(&pb, a, candidate)?
            } else {
                verified_sup(a, candidate, |i, point| {
                    let other = b.fundamental_step(i).map_err(|e| e.to_string())?;
                    sup_pairs(point, &other, memo)
                })?
            }
        }
    };
    memo.insert(key, value.clone());
    Ok(value)
}

// sup {c ⊕ β + 1 | β < bound}; at a limit, the strictly monotone map can be
// sampled along the fundamental sequence directly
fn sup_with_fixed(c: &Ordinal, bound: &Ordinal, candidate: Ordinal) -> Result<Ordinal, String> {
    match bound.predecessor() {
        Some(pb) => {
            let value = c.nat_sum(&pb).successor();
            if value == candidate {
                Ok(value)
            } else {
                Err(format!("expected {value}, closed form gave {candidate}"))
            }
        }
        None => verified_sup(bound, candidate, |_, point| Ok(c.nat_sum(point).successor())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn recursion_reproduces_known_values() {
        assert_eq!(hess_prod_by_recursion(&o("w + 1"), &o("w")), Ok(o("w^2")));
        assert_eq!(hess_prod_by_recursion(&o("w + 1"), &o("2")), Ok(o("w*2 + 2")));
        assert_eq!(h_sup_product_by_recursion(&o("2"), &o("3")), Ok(o("4")));
        assert_eq!(h_sup_product_by_recursion(&o("w"), &o("w + 1")), Ok(o("w*2")));
        assert_eq!(h_sup_product_by_recursion(&o("w^2"), &o("w")), Ok(o("w^2")));
    }

    #[test]
    fn wrong_candidate_is_rejected() {
        // ω·2 ≠ sup_i (ω+1)⊗i
        let err = verified_sup(&o("w"), o("w*2"), |i, _| Ok(o("w + 1").nat_prod(&Ordinal::from(i))));
        assert!(err.is_err());
        let err = verified_sup(&o("w"), o("w^3"), |i, _| Ok(o("w + 1").nat_prod(&Ordinal::from(i))));
        assert!(err.is_err());
        assert_eq!(ordinals_below_omega_cubed(2).len(), 27);
    }
}
