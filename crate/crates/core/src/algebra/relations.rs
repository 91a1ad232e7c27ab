use std::fmt;

use super::rules::evaluate;
use super::value::InvariantValue;
use super::WpoTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    Holds,
    Violated,
    /// At least one side is unknown.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    /// e.g. `o(Mr) <= o(Md)`
    pub name: &'static str,
    pub left: InvariantValue,
    pub right: InvariantValue,
    pub status: RelationStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationsReport {
    pub term: String,
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn violations(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == RelationStatus::Violated)
    }

    pub fn holds(&self) -> bool {
        self.violations().next().is_none()
    }
}

impl fmt::Display for RelationsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.term)?;
        for c in &self.checks {
            let status = match c.status {
                RelationStatus::Holds => "holds",
                RelationStatus::Violated => "VIOLATED",
                RelationStatus::Skipped => "skipped",
            };
            writeln!(f, "  {}: {} vs {} ({status})", c.name, c.left, c.right)?;
        }
        Ok(())
    }
}

/// Compares `Mr(t)` against `Md(t)`: `o` and `w` may only be smaller for the
/// multiset ordering, `h` only larger.
pub fn consistency_relations(t: &WpoTerm) -> RelationsReport {
    let (r, _) = evaluate(&WpoTerm::multiset_ord(t.clone()));
    let (d, _) = evaluate(&WpoTerm::multiset_emb(t.clone()));
    let check = |name, left: &InvariantValue, right: &InvariantValue, smaller: bool| {
        let status = match (left.as_known(), right.as_known()) {
            (Some(a), Some(b)) => {
                let ok = if smaller { a <= b } else { a >= b };
                if ok {
                    RelationStatus::Holds
                } else {
                    RelationStatus::Violated
                }
            }
            _ => RelationStatus::Skipped,
        };
        RelationCheck {
            name,
            left: left.clone(),
            right: right.clone(),
            status,
        }
    };
    RelationsReport {
        term: t.to_string(),
        checks: vec![
            check("o(Mr) <= o(Md)", &r.o, &d.o, true),
            check("w(Mr) <= w(Md)", &r.w, &d.w, true),
            check("h(Mr) >= h(Md)", &r.h, &d.h, false),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Ordinal;

    #[test]
    fn examples() {
        let report = consistency_relations(&WpoTerm::Gamma(3));
        assert!(report.holds());
        let o3 = Ordinal::omega_power(&Ordinal::from(3));
        assert_eq!(report.checks[0].left, InvariantValue::Known(o3.clone()));
        assert_eq!(report.checks[0].right, InvariantValue::Known(o3));
        assert!(consistency_relations(&WpoTerm::ordinal(Ordinal::omega())).holds());
        let h = consistency_relations(&WpoTerm::H);
        let ww = Ordinal::omega_power(&Ordinal::omega());
        assert_eq!(h.checks[1].left, InvariantValue::Known(ww.clone()));
        assert_eq!(h.checks[1].right, InvariantValue::Known(ww));
        assert!(h.holds());
    }
}
