//! Ordinal notations below ε_ω in Cantor normal form.
//!
//! An [`Ordinal`] is a list of terms `ω^e · c` with strictly decreasing
//! exponents and positive coefficients. An exponent is either another
//! ordinal or the atom `ε_k`, so that `ω^{ε_k} = ε_k` is stored as the single
//! term `(ε_k, 1)`. With that convention every ordinal has exactly one
//! representation and structural equality is ordinal equality.

mod arith;
mod sample;
mod special;
mod text;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use sample::{random_below, OrdinalSampler};
pub use special::{Classification, OrdinalKind};
pub use text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("left subtraction {minuend} - {subtrahend} is undefined: subtrahend is larger")]
    SubtrahendTooLarge { minuend: String, subtrahend: String },
    #[error("h-sup product needs both arguments to be at least 1")]
    EmptyProductRange,
    #[error("fundamental sequence requested for {0}, which is not a limit")]
    NotLimit(String),
    #[error("fundamental sequences are only defined below epsilon_0, got {0}")]
    AboveEpsilonZero(String),
    #[error("exponents are not strictly decreasing")]
    NotNormalForm,
    #[error("zero coefficient")]
    ZeroCoefficient,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Exponent of a CNF term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    /// The epsilon number ε_k.
    Epsilon(u32),
    /// Any other ordinal. Never holds exactly ε_k.
    Ordinal(Ordinal),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Exponent,
    coefficient: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Exponent {
    /// Canonical exponent for `value`: `ε_k` is folded into the atom.
    pub fn from_ordinal(value: Ordinal) -> Exponent {
        match value.as_epsilon() {
            Some(k) => Exponent::Epsilon(k),
            None => Exponent::Ordinal(value),
        }
    }

    pub fn value(&self) -> Ordinal {
        match self {
            Exponent::Epsilon(k) => Ordinal::epsilon(*k),
            Exponent::Ordinal(o) => o.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exponent::Ordinal(o) if o.is_zero())
    }

    fn zero() -> Exponent {
        Exponent::Ordinal(Ordinal::zero())
    }
}

impl Term {
    pub fn exponent(&self) -> &Exponent {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::from(1)
    }

    pub fn omega() -> Ordinal {
        Ordinal::omega_power(&Ordinal::one())
    }

    pub fn epsilon(k: u32) -> Ordinal {
        Ordinal {
            terms: vec![Term {
                exponent: Exponent::Epsilon(k),
                coefficient: 1,
            }],
        }
    }

    /// `ω^exponent`; fixes ε-numbers.
    pub fn omega_power(exponent: &Ordinal) -> Ordinal {
        Ordinal::monomial(Exponent::from_ordinal(exponent.clone()), 1)
    }

    pub(crate) fn monomial(exponent: Exponent, coefficient: u64) -> Ordinal {
        debug_assert!(coefficient > 0);
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds `Σ ω^{e_i}·c_i`, checking the normal-form invariants.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Ordinal, OrdinalError> {
        let mut out = Vec::with_capacity(terms.len());
        for (exponent, coefficient) in terms {
            if coefficient == 0 {
                return Err(OrdinalError::ZeroCoefficient);
            }
            out.push(Term {
                exponent: Exponent::from_ordinal(exponent),
                coefficient,
            });
        }
        let ordinal = Ordinal { terms: out };
        if !ordinal.is_normal() {
            return Err(OrdinalError::NotNormalForm);
        }
        Ok(ordinal)
    }

    pub(crate) fn from_raw(terms: Vec<Term>) -> Ordinal {
        let ordinal = Ordinal { terms };
        debug_assert!(ordinal.is_normal(), "non-normal ordinal {ordinal:?}");
        ordinal
    }

    fn is_normal(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient > 0)
            && self
                .terms
                .windows(2)
                .all(|w| cmp_exponents(&w[0].exponent, &w[1].exponent) == Ordering::Greater)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    pub fn as_epsilon(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [Term {
                exponent: Exponent::Epsilon(k),
                coefficient: 1,
            }] => Some(*k),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    /// Coefficient of the finite tail, i.e. the `n` in `γ + n` with `γ` limit or zero.
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient,
            _ => 0,
        }
    }

    /// The limit-or-zero part `γ` of `γ + n`.
    pub fn limit_part(&self) -> Ordinal {
        if self.is_successor() {
            Ordinal {
                terms: self.terms[..self.terms.len() - 1].to_vec(),
            }
        } else {
            self.clone()
        }
    }

    /// Predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a term");
        last.coefficient -= 1;
        if last.coefficient == 0 {
            terms.pop();
        }
        Some(Ordinal { terms })
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// True when some exponent, at any depth, is an ε-atom.
    pub fn mentions_epsilon(&self) -> bool {
        self.terms.iter().any(|t| match &t.exponent {
            Exponent::Epsilon(_) => true,
            Exponent::Ordinal(o) => o.mentions_epsilon(),
        })
    }

    /// Terms whose exponent is at least `floor`.
    pub(crate) fn terms_at_least(&self, floor: &Exponent) -> Ordinal {
        Ordinal {
            terms: self
                .terms
                .iter()
                .filter(|t| cmp_exponents(&t.exponent, floor) != Ordering::Less)
                .cloned()
                .collect(),
        }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Ordinal {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal::monomial(Exponent::zero(), n)
        }
    }
}

pub(crate) fn cmp_exponents(a: &Exponent, b: &Exponent) -> Ordering {
    match (a, b) {
        (Exponent::Epsilon(j), Exponent::Epsilon(k)) => j.cmp(k),
        (Exponent::Epsilon(k), Exponent::Ordinal(x)) => cmp_epsilon_with(*k, x),
        (Exponent::Ordinal(x), Exponent::Epsilon(k)) => cmp_epsilon_with(*k, x).reverse(),
        (Exponent::Ordinal(x), Exponent::Ordinal(y)) => cmp_ordinals(x, y),
    }
}

/// Compares ε_k with `x`.
fn cmp_epsilon_with(k: u32, x: &Ordinal) -> Ordering {
    let Some(lead) = x.terms.first() else {
        return Ordering::Greater;
    };
    match cmp_exponents(&Exponent::Epsilon(k), &lead.exponent) {
        // x < ω^{lead+1} <= ε_k
        Ordering::Greater => Ordering::Greater,
        Ordering::Less => Ordering::Less,
        Ordering::Equal => {
            if x.terms.len() == 1 && lead.coefficient == 1 {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
    }
}

fn cmp_ordinals(a: &Ordinal, b: &Ordinal) -> Ordering {
    for (x, y) in a.terms.iter().zip(&b.terms) {
        let ord = cmp_exponents(&x.exponent, &y.exponent).then(x.coefficient.cmp(&y.coefficient));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_ordinals(self, other)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl std::str::FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

pub(crate) use text::{parse_term_at, Cursor};
