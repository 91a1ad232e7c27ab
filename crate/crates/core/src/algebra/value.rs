use std::fmt;

use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unknown {
    pub reason: String,
    pub lower: Option<Ordinal>,
    pub upper: Option<Ordinal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantValue {
    Known(Ordinal),
    Unknown(Unknown),
}

impl InvariantValue {
    pub fn known(o: impl Into<Ordinal>) -> InvariantValue {
        InvariantValue::Known(o.into())
    }

    pub fn unknown(reason: impl Into<String>) -> InvariantValue {
        InvariantValue::Unknown(Unknown {
            reason: reason.into(),
            lower: None,
            upper: None,
        })
    }

    pub fn bounded(
        reason: impl Into<String>,
        lower: Option<Ordinal>,
        upper: Option<Ordinal>,
    ) -> InvariantValue {
        InvariantValue::Unknown(Unknown {
            reason: reason.into(),
            lower,
            upper,
        })
    }

    pub fn as_known(&self) -> Option<&Ordinal> {
        match self {
            InvariantValue::Known(o) => Some(o),
            InvariantValue::Unknown(_) => None,
        }
    }

    pub fn is_known(&self) -> bool {
        self.as_known().is_some()
    }

    /// Best lower bound: the value itself when known.
    pub fn lower(&self) -> Option<&Ordinal> {
        match self {
            InvariantValue::Known(o) => Some(o),
            InvariantValue::Unknown(u) => u.lower.as_ref(),
        }
    }

    pub fn upper(&self) -> Option<&Ordinal> {
        match self {
            InvariantValue::Known(o) => Some(o),
            InvariantValue::Unknown(u) => u.upper.as_ref(),
        }
    }

    /// Whether `value` is compatible with this entry.
    pub fn admits(&self, value: &Ordinal) -> bool {
        match self {
            InvariantValue::Known(o) => o == value,
            InvariantValue::Unknown(u) => {
                u.lower.as_ref().is_none_or(|l| l <= value)
                    && u.upper.as_ref().is_none_or(|h| value <= h)
            }
        }
    }

    /// Applies a monotone map. Unknowns keep their reason, tagged with `rule`,
    /// and their bounds are mapped.
    pub(crate) fn map(&self, rule: &str, f: impl Fn(&Ordinal) -> Ordinal) -> InvariantValue {
        match self {
            InvariantValue::Known(o) => InvariantValue::Known(f(o)),
            InvariantValue::Unknown(u) => InvariantValue::Unknown(Unknown {
                reason: format!("{} [via {rule}]", u.reason),
                lower: u.lower.as_ref().map(&f),
                upper: u.upper.as_ref().map(&f),
            }),
        }
    }

    /// Binary version of [`Self::map`]; `f` must be monotone in both arguments.
    pub(crate) fn map2(
        &self,
        other: &InvariantValue,
        rule: &str,
        f: impl Fn(&Ordinal, &Ordinal) -> Ordinal,
    ) -> InvariantValue {
        if let (Some(a), Some(b)) = (self.as_known(), other.as_known()) {
            return InvariantValue::Known(f(a, b));
        }
        let mut reasons: Vec<&str> = Vec::new();
        for v in [self, other] {
            if let InvariantValue::Unknown(u) = v {
                if !reasons.contains(&u.reason.as_str()) {
                    reasons.push(&u.reason);
                }
            }
        }
        let lower = match (self.lower(), other.lower()) {
            (Some(a), Some(b)) => Some(f(a, b)),
            _ => None,
        };
        let upper = match (self.upper(), other.upper()) {
            (Some(a), Some(b)) => Some(f(a, b)),
            _ => None,
        };
        InvariantValue::Unknown(Unknown {
            reason: format!("{} [via {rule}]", reasons.join("; ")),
            lower,
            upper,
        })
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Known(o) => write!(f, "{o}"),
            InvariantValue::Unknown(u) => {
                write!(f, "unknown: {}", u.reason)?;
                match (&u.lower, &u.upper) {
                    (Some(l), Some(h)) => write!(f, " (between {l} and {h})"),
                    (Some(l), None) => write!(f, " (at least {l})"),
                    (None, Some(h)) => write!(f, " (at most {h})"),
                    (None, None) => Ok(()),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTuple {
    pub o: InvariantValue,
    pub h: InvariantValue,
    pub w: InvariantValue,
    pub sot: InvariantValue,
}

impl InvariantTuple {
    pub fn known(o: Ordinal, h: Ordinal, w: Ordinal, sot: Ordinal) -> InvariantTuple {
        InvariantTuple {
            o: InvariantValue::Known(o),
            h: InvariantValue::Known(h),
            w: InvariantValue::Known(w),
            sot: InvariantValue::Known(sot),
        }
    }

    pub fn finite(o: u64, h: u64, w: u64, sot: u64) -> InvariantTuple {
        InvariantTuple::known(o.into(), h.into(), w.into(), sot.into())
    }

    pub fn get(&self, name: &str) -> Option<&InvariantValue> {
        match name {
            "o" => Some(&self.o),
            "h" => Some(&self.h),
            "w" => Some(&self.w),
            "sot" => Some(&self.sot),
            _ => None,
        }
    }

    pub fn components(&self) -> [(&'static str, &InvariantValue); 4] {
        [("o", &self.o), ("h", &self.h), ("w", &self.w), ("sot", &self.sot)]
    }

    /// The `o` component; every rule produces it exactly.
    pub fn order_type(&self) -> &Ordinal {
        self.o.as_known().expect("o is always known")
    }
}

/// Compact form used in traces: unknown entries print as `?`.
impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &InvariantValue| match v.as_known() {
            Some(o) => o.to_string(),
            None => "?".to_string(),
        };
        write!(
            f,
            "o={}, h={}, w={}, sot={}",
            show(&self.o),
            show(&self.h),
            show(&self.w),
            show(&self.sot)
        )
    }
}
