//! Ordinal invariants of well partial orders.
//!
//! The crate has four layers:
//!
//! * [`ordinal`]: Cantor-normal-form notations below ε_ω with ordinal,
//!   natural and Hessenberg-based arithmetic.
//! * [`poset`]: explicit finite posets, residuals, compositions and
//!   linear extensions.
//! * [`oracle`]: brute-force ground truth on finite posets and bounded
//!   multisets.
//! * [`algebra`]: compositional evaluation of `o`, `h`, `w` and the maximal
//!   safe order type over wpo expressions.
//!
//! [`query`] parses the textual expression language and [`verify`] runs the
//! seeded property suites used by the command-line tool.

pub mod ordinal;
pub mod algebra;
pub mod oracle;
pub mod poset;
pub mod query;
pub mod verify;

mod matching;

pub use ordinal::{Ordinal, OrdinalError};
pub use poset::{Composition, FinitePoset, PosetError, ResidualKind};
