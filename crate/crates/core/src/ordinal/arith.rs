use std::cmp::Ordering;

use super::{cmp_exponents, Exponent, Ordinal, OrdinalError, Term};

fn checked(c: Option<u64>) -> u64 {
    c.expect("ordinal coefficient overflowed u64")
}

impl Ordinal {
    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut rest = &other.terms[..];
        for t in &self.terms {
            match cmp_exponents(&t.exponent, &lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: t.exponent.clone(),
                        coefficient: checked(t.coefficient.checked_add(lead.coefficient)),
                    });
                    rest = &other.terms[1..];
                    break;
                }
                Ordering::Less => break,
            }
        }
        terms.extend_from_slice(rest);
        Ordinal::from_raw(terms)
    }

    /// Ordinal product `self · other`.
    pub fn multiply(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Ordinal::zero();
        }
        let lead = &self.terms[0];
        let lead_exponent = lead.exponent.value();
        let mut out = Ordinal::zero();
        for t in &other.terms {
            let piece = if t.exponent.is_zero() {
                // self · n only scales the leading coefficient
                let mut terms = self.terms.clone();
                terms[0].coefficient = checked(lead.coefficient.checked_mul(t.coefficient));
                Ordinal::from_raw(terms)
            } else {
                let exponent = lead_exponent.add(&t.exponent.value());
                Ordinal::monomial(Exponent::from_ordinal(exponent), t.coefficient)
            };
            out = out.add(&piece);
        }
        out
    }

    /// Left subtraction: the unique `c` with `subtrahend + c = self`.
    ///
    /// `0 - 1` is defined as `0`.
    pub fn left_subtract(&self, subtrahend: &Ordinal) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() && subtrahend.as_finite() == Some(1) {
            return Ok(Ordinal::zero());
        }
        if subtrahend > self {
            return Err(OrdinalError::SubtrahendTooLarge {
                minuend: self.to_string(),
                subtrahend: subtrahend.to_string(),
            });
        }
        for (i, b) in subtrahend.terms.iter().enumerate() {
            let a = &self.terms[i];
            match cmp_exponents(&b.exponent, &a.exponent) {
                Ordering::Less => return Ok(Ordinal::from_raw(self.terms[i..].to_vec())),
                Ordering::Equal if b.coefficient < a.coefficient => {
                    let mut terms = vec![Term {
                        exponent: a.exponent.clone(),
                        coefficient: a.coefficient - b.coefficient,
                    }];
                    terms.extend_from_slice(&self.terms[i + 1..]);
                    return Ok(Ordinal::from_raw(terms));
                }
                Ordering::Equal if b.coefficient == a.coefficient => continue,
                _ => unreachable!("subtrahend <= minuend was checked"),
            }
        }
        Ok(Ordinal::from_raw(
            self.terms[subtrahend.terms.len()..].to_vec(),
        ))
    }

    /// Natural (Hessenberg) sum.
    pub fn nat_sum(&self, other: &Ordinal) -> Ordinal {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match cmp_exponents(&a[i].exponent, &b[j].exponent) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: a[i].exponent.clone(),
                        coefficient: checked(a[i].coefficient.checked_add(b[j].coefficient)),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend_from_slice(&b[j..]);
        Ordinal::from_raw(terms)
    }

    /// Natural product: `⊕_{i,j} ω^{α_i ⊕ β_j}` over the expanded CNF terms.
    pub fn nat_prod(&self, other: &Ordinal) -> Ordinal {
        let mut out = Ordinal::zero();
        for a in &self.terms {
            let a_exp = a.exponent.value();
            for b in &other.terms {
                let exponent = Exponent::from_ordinal(a_exp.nat_sum(&b.exponent.value()));
                let coefficient = checked(a.coefficient.checked_mul(b.coefficient));
                out = out.nat_sum(&Ordinal::monomial(exponent, coefficient));
            }
        }
        out
    }

    /// `self ⊗ n` for finite `n`.
    pub(crate) fn nat_scale(&self, n: u64) -> Ordinal {
        if n == 0 {
            return Ordinal::zero();
        }
        Ordinal::from_raw(
            self.terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: checked(t.coefficient.checked_mul(n)),
                })
                .collect(),
        )
    }

    /// Hessenberg-based product `self ⊙ other`.
    ///
    /// Closed form `α ⊙ (λ + n) = (α · λ) ⊕ (α ⊗ n)` with `λ` limit or zero.
    pub fn hess_prod(&self, other: &Ordinal) -> Ordinal {
        let limit = other.limit_part();
        self.multiply(&limit)
            .nat_sum(&self.nat_scale(other.finite_part()))
    }
}
