//! Brute-force ground truth.
//!
//! Everything here is exhaustive and guarded by explicit size limits. These
//! computations are slow on purpose: they are what the compositional engine
//! in [`crate::algebra`] is checked against.

mod lemmas;
mod multiset;
mod ordinals;
mod rank;
mod sot;

use thiserror::Error;

use crate::poset::PosetError;

pub use lemmas::{check_transformation_lemma, Comparator, LemmaId, LemmaReport, Verdict};
pub use multiset::{chain_multiset_ordinal, enumerate_multisets, leq_emb, leq_r, Multiset};
pub use ordinals::{hess_prod_by_recursion, h_sup_product_by_recursion, ordinals_below_omega_cubed};
pub use rank::{check_height_width, rank_invariants, rank_invariants_guarded, RankInvariants};
pub use sot::{
    delta_bound_check, is_safe_linearisation, is_safe_linearisation_literal, sot_brute_force,
    sot_brute_force_guarded, sot_fast, sot_nonempty_reading, sot_residual_check,
    SafeSubsetWitness, SOT_FAST_GUARD,
};

/// Default guard for [`rank_invariants`].
pub const RANK_GUARD: usize = 9;
/// Default guard for [`sot_brute_force`].
pub const SOT_GUARD: usize = 8;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("poset has {size} elements, above the oracle guard of {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("multiset mentions element {element}, but the poset has {size} elements")]
    ForeignElement { element: usize, size: usize },
    #[error("rank recursion disagrees with the direct computation on {poset}: {detail}")]
    Inconsistent { poset: String, detail: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn guard(size: usize, guard: usize) -> Result<(), OracleError> {
    if size > guard {
        Err(OracleError::GuardExceeded { size, guard })
    } else {
        Ok(())
    }
}
