use rand::Rng;

use super::WpoTerm;
use crate::ordinal::{random_below, Ordinal};
use crate::poset::{random_poset, Composition};

const COMPOSITIONS: [Composition; 4] = [
    Composition::DisjointSum,
    Composition::LexSum,
    Composition::Cartesian,
    Composition::LexProduct,
];

/// Shape parameters for [`random_term`].
#[derive(Debug, Clone)]
pub struct TermSampler {
    pub max_depth: usize,
    /// Probability that an inner node is a multiset construction.
    pub multiset_rate: f64,
    pub max_gamma: usize,
    pub max_poset: usize,
    /// Largest CNF exponent of ordinal leaves, as a finite number.
    pub max_exponent: u64,
}

impl Default for TermSampler {
    fn default() -> Self {
        TermSampler {
            max_depth: 3,
            multiset_rate: 0.3,
            max_gamma: 4,
            max_poset: 4,
            max_exponent: 3,
        }
    }
}

/// A random term over all leaf kinds.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, sampler: &TermSampler) -> WpoTerm {
    build(rng, sampler, sampler.max_depth)
}

fn build<R: Rng + ?Sized>(rng: &mut R, s: &TermSampler, depth: usize) -> WpoTerm {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..4) {
            0 => WpoTerm::ordinal(random_below(rng, s.max_exponent, 3)),
            1 => WpoTerm::Gamma(rng.gen_range(0..=s.max_gamma)),
            2 => WpoTerm::H,
            _ => {
                let n = rng.gen_range(0..=s.max_poset);
                WpoTerm::poset(random_poset(rng, n, 0.4))
            }
        };
    }
    if rng.gen_bool(s.multiset_rate) {
        let child = build(rng, s, depth - 1);
        return if rng.gen_bool(0.5) {
            WpoTerm::multiset_emb(child)
        } else {
            WpoTerm::multiset_ord(child)
        };
    }
    let op = COMPOSITIONS[rng.gen_range(0..4)];
    WpoTerm::binary(op, build(rng, s, depth - 1), build(rng, s, depth - 1))
}

/// A random term whose leaves are all finite, combined only by the four
/// compositions, with at most `max_leaf` elements per leaf.
pub fn random_finite_term<R: Rng + ?Sized>(rng: &mut R, depth: usize, max_leaf: usize) -> WpoTerm {
    if depth == 0 || rng.gen_bool(0.25) {
        let n = rng.gen_range(0..=max_leaf);
        return match rng.gen_range(0..3) {
            0 => WpoTerm::ordinal(Ordinal::from(n as u64)),
            1 => WpoTerm::Gamma(n),
            _ => WpoTerm::poset(random_poset(rng, n, 0.4)),
        };
    }
    let op = COMPOSITIONS[rng.gen_range(0..4)];
    WpoTerm::binary(
        op,
        random_finite_term(rng, depth - 1, max_leaf),
        random_finite_term(rng, depth - 1, max_leaf),
    )
}
