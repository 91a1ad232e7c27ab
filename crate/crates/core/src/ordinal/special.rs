//! Operators on ordinals used by the invariant rules: the hat transform,
//! `h*`, the δ-bound, the cartesian height supremum, classification, and
//! canonical fundamental sequences.

use std::cmp::Ordering;

use super::{cmp_exponents, Exponent, Ordinal, OrdinalError, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdinalKind {
    Zero,
    Successor,
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub kind: OrdinalKind,
    pub additively_indecomposable: bool,
    pub multiplicatively_indecomposable: bool,
    pub epsilon_number: bool,
}

/// Whether an exponent has the shape `ε_k + n` with `n` finite (possibly 0).
fn is_epsilon_plus_finite(exponent: &Exponent) -> bool {
    match exponent {
        Exponent::Epsilon(_) => true,
        Exponent::Ordinal(o) => matches!(
            o.terms.as_slice(),
            [Term { exponent: Exponent::Epsilon(_), coefficient: 1 }, tail] if tail.exponent.is_zero()
        ),
    }
}

impl Ordinal {
    /// The hat transform: every CNF exponent of the form `ε_k + n` is bumped by one.
    ///
    /// Exponents like `ε_k + λ + n` with `λ` a nonzero limit are left alone.
    pub fn hat(&self) -> Ordinal {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if is_epsilon_plus_finite(&t.exponent) {
                    Term {
                        exponent: Exponent::from_ordinal(t.exponent.value().successor()),
                        coefficient: t.coefficient,
                    }
                } else {
                    t.clone()
                }
            })
            .collect();
        Ordinal::from_raw(terms)
    }

    pub fn is_additively_indecomposable(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coefficient == 1)
    }

    /// `h*`: the height of the multiset embedding of a wpo of height `self`.
    pub fn h_star(&self) -> Ordinal {
        if !self.is_finite() && self.is_additively_indecomposable() {
            self.clone()
        } else {
            self.multiply(&Ordinal::omega())
        }
    }

    /// `δ(α)`: `α` for limits (and zero), `γ + ⌊n/2⌋` for `α = γ + n`.
    pub fn delta_bound(&self) -> Ordinal {
        let n = self.finite_part();
        self.limit_part().add(&Ordinal::from(n / 2))
    }

    /// `sup {α ⊕ β + 1 | α < self, β < other}`, the height of a cartesian product.
    pub fn h_sup_product(&self, other: &Ordinal) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() || other.is_zero() {
            return Err(OrdinalError::EmptyProductRange);
        }
        if let Some(pred) = self.predecessor() {
            return Ok(sup_below_nat_sum(other, &pred));
        }
        if let Some(pred) = other.predecessor() {
            return Ok(sup_below_nat_sum(self, &pred));
        }
        let e = &self.terms.last().expect("nonzero").exponent;
        let f = &other.terms.last().expect("nonzero").exponent;
        Ok(match cmp_exponents(e, f) {
            Ordering::Greater => self.nat_sum(&other.terms_at_least(e)),
            Ordering::Less => other.nat_sum(&self.terms_at_least(f)),
            Ordering::Equal => {
                let mut shortened = other.terms.clone();
                let last = shortened.last_mut().expect("nonzero");
                last.coefficient -= 1;
                if last.coefficient == 0 {
                    shortened.pop();
                }
                self.nat_sum(&Ordinal::from_raw(shortened))
            }
        })
    }

    pub fn classify(&self) -> Classification {
        let kind = if self.is_zero() {
            OrdinalKind::Zero
        } else if self.is_successor() {
            OrdinalKind::Successor
        } else {
            OrdinalKind::Limit
        };
        let additive = self.is_additively_indecomposable();
        let multiplicative = additive
            && self.terms[0]
                .exponent
                .value()
                .is_additively_indecomposable();
        Classification {
            kind,
            additively_indecomposable: additive,
            multiplicatively_indecomposable: multiplicative,
            epsilon_number: self.as_epsilon().is_some(),
        }
    }

    /// The `i`-th element of the canonical fundamental sequence of a limit below ε_0.
    ///
    /// A last term `ω^{β+1}` becomes `ω^β·i`; a last term `ω^λ` with `λ` limit
    /// becomes `ω^{λ[i]}`.
    pub fn fundamental_step(&self, i: u64) -> Result<Ordinal, OrdinalError> {
        if self.mentions_epsilon() {
            return Err(OrdinalError::AboveEpsilonZero(self.to_string()));
        }
        if !self.is_limit() {
            return Err(OrdinalError::NotLimit(self.to_string()));
        }
        let mut prefix = self.terms.clone();
        let last = prefix.last_mut().expect("limit is nonzero");
        let exponent = last.exponent.value();
        last.coefficient -= 1;
        if last.coefficient == 0 {
            prefix.pop();
        }
        let prefix = Ordinal::from_raw(prefix);
        let tail = match exponent.predecessor() {
            Some(_) if i == 0 => Ordinal::zero(),
            Some(pred) => Ordinal::monomial(Exponent::from_ordinal(pred), i),
            None => Ordinal::omega_power(&exponent.fundamental_step(i)?),
        };
        Ok(prefix.add(&tail))
    }
}

/// `sup {α ⊕ c + 1 | α < bound}` for `bound >= 1`.
fn sup_below_nat_sum(bound: &Ordinal, c: &Ordinal) -> Ordinal {
    match bound.predecessor() {
        Some(pred) => pred.nat_sum(c).successor(),
        None => {
            let e = &bound.terms.last().expect("nonzero").exponent;
            bound.nat_sum(&c.terms_at_least(e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn hat_examples() {
        assert_eq!(o("w^w").hat(), o("w^w"));
        assert_eq!(Ordinal::epsilon(0).hat(), o("w^(eps0 + 1)"));
        assert_eq!(o("3").hat(), o("3"));
        assert_eq!(Ordinal::zero().hat(), Ordinal::zero());
        assert_eq!(
            o("w^(eps1 + 3)*2 + eps0 + w^5").hat(),
            o("w^(eps1 + 4)*2 + w^(eps0 + 1) + w^5")
        );
        // ε_0 + ω is not ε + finite
        assert_eq!(o("w^(eps0 + w)").hat(), o("w^(eps0 + w)"));
    }

    #[test]
    fn h_star_examples() {
        assert_eq!(Ordinal::omega().h_star(), Ordinal::omega());
        assert_eq!(o("5").h_star(), Ordinal::omega());
        assert_eq!(o("w + 1").h_star(), o("w^2"));
        assert_eq!(o("1").h_star(), Ordinal::omega());
        assert_eq!(Ordinal::epsilon(0).h_star(), Ordinal::epsilon(0));
    }

    #[test]
    fn delta_bound_examples() {
        assert_eq!(Ordinal::omega().delta_bound(), Ordinal::omega());
        assert_eq!(o("w + 5").delta_bound(), o("w + 2"));
        assert_eq!(o("6").delta_bound(), o("3"));
        assert_eq!(o("1").delta_bound(), Ordinal::zero());
        assert_eq!(Ordinal::zero().delta_bound(), Ordinal::zero());
    }

    #[test]
    fn h_sup_product_examples() {
        assert_eq!(o("1").h_sup_product(&o("1")), Ok(o("1")));
        assert_eq!(o("2").h_sup_product(&o("3")), Ok(o("4")));
        assert_eq!(Ordinal::omega().h_sup_product(&Ordinal::omega()), Ok(Ordinal::omega()));
        assert_eq!(o("w").h_sup_product(&o("w + 1")), Ok(o("w*2")));
        assert_eq!(o("w^2").h_sup_product(&o("w")), Ok(o("w^2")));
        assert_eq!(
            o("w").h_sup_product(&Ordinal::zero()),
            Err(OrdinalError::EmptyProductRange)
        );
    }

    #[test]
    fn classify_examples() {
        let c = o("w*2").classify();
        assert_eq!(c.kind, OrdinalKind::Limit);
        assert!(!c.additively_indecomposable);
        let c = o("w^3").classify();
        assert!(c.additively_indecomposable && !c.multiplicatively_indecomposable);
        let c = o("w^w").classify();
        assert!(c.multiplicatively_indecomposable && !c.epsilon_number);
        let c = Ordinal::epsilon(0).classify();
        assert!(c.multiplicatively_indecomposable && c.epsilon_number);
        let c = Ordinal::zero().classify();
        assert_eq!(c.kind, OrdinalKind::Zero);
        assert!(!c.additively_indecomposable && !c.multiplicatively_indecomposable);
        assert_eq!(o("w + 4").classify().kind, OrdinalKind::Successor);
    }

    #[test]
    fn fundamental_step_examples() {
        assert_eq!(o("w").fundamental_step(3), Ok(o("3")));
        assert_eq!(o("w^2").fundamental_step(2), Ok(o("w*2")));
        assert_eq!(o("w^w").fundamental_step(3), Ok(o("w^3")));
        assert_eq!(o("w^2*2 + w").fundamental_step(4), Ok(o("w^2*2 + 4")));
        assert_eq!(o("w^(w + 1)").fundamental_step(2), Ok(o("w^w*2")));
        assert!(matches!(o("w + 1").fundamental_step(1), Err(OrdinalError::NotLimit(_))));
        assert!(matches!(Ordinal::zero().fundamental_step(1), Err(OrdinalError::NotLimit(_))));
        assert!(matches!(
            Ordinal::epsilon(0).fundamental_step(1),
            Err(OrdinalError::AboveEpsilonZero(_))
        ));
    }
}
