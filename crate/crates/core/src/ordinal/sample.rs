//! Seeded random ordinal notations for property suites.

use rand::Rng;

use super::{Exponent, Ordinal};

/// Shape parameters for random ordinals below ε_ω.
#[derive(Debug, Clone, Copy)]
pub struct OrdinalSampler {
    pub max_terms: usize,
    pub max_coefficient: u64,
    pub max_depth: u32,
    /// ε atoms are drawn from `0..epsilon_atoms`; zero disables them.
    pub epsilon_atoms: u32,
}

impl Default for OrdinalSampler {
    fn default() -> Self {
        OrdinalSampler {
            max_terms: 3,
            max_coefficient: 3,
            max_depth: 2,
            epsilon_atoms: 3,
        }
    }
}

impl OrdinalSampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Ordinal {
        self.sample_at(rng, self.max_depth)
    }

    fn sample_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: u32) -> Ordinal {
        let n_terms = rng.gen_range(0..=self.max_terms);
        let mut exponents: Vec<Ordinal> = (0..n_terms)
            .map(|_| self.sample_exponent(rng, depth))
            .collect();
        exponents.sort_by(|a, b| b.cmp(a));
        exponents.dedup();
        let mut out = Ordinal::zero();
        for e in exponents {
            let c = rng.gen_range(1..=self.max_coefficient);
            out = out.add(&Ordinal::monomial(Exponent::from_ordinal(e), c));
        }
        out
    }

    fn sample_exponent<R: Rng + ?Sized>(&self, rng: &mut R, depth: u32) -> Ordinal {
        let roll = rng.gen_range(0..10);
        if depth == 0 || roll < 4 {
            return Ordinal::from(rng.gen_range(0..=self.max_coefficient));
        }
        if self.epsilon_atoms > 0 && roll < 6 {
            let eps = Ordinal::epsilon(rng.gen_range(0..self.epsilon_atoms));
            // ε_k, or ε_k + small tail
            return if rng.gen_bool(0.5) {
                eps
            } else {
                eps.add(&self.sample_at(rng, depth - 1))
            };
        }
        self.sample_at(rng, depth - 1)
    }
}

/// Uniform-ish random ordinal below `ω^max_exponent` with finite exponents.
pub fn random_below<R: Rng + ?Sized>(rng: &mut R, max_exponent: u64, max_coefficient: u64) -> Ordinal {
    let mut out = Ordinal::zero();
    for e in (0..max_exponent).rev() {
        let c = rng.gen_range(0..=max_coefficient);
        if c > 0 {
            out = out.add(&Ordinal::monomial(Exponent::from_ordinal(Ordinal::from(e)), c));
        }
    }
    out
}
