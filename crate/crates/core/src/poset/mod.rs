//! Explicit finite partial orders.
//!
//! A [`FinitePoset`] stores its labels and the full reflexive-transitive
//! closure as a dense boolean matrix, so comparability queries are O(1).

mod extensions;
mod generate;
mod io;
mod measures;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub use extensions::LinearExtensions;
pub use generate::{all_posets, isomorphism_classes, random_poset};
pub use io::PosetDocument;

/// Default size guard for linear-extension enumeration.
pub const LINEAR_EXTENSION_GUARD: usize = 10;
/// Default size guard for brute-force isomorphism.
pub const ISOMORPHISM_GUARD: usize = 10;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("duplicate element '{0}'")]
    DuplicateElement(String),
    #[error("unknown element '{0}'")]
    UnknownElement(String),
    #[error("relation has a cycle through '{0}' and '{1}'")]
    Cycle(String, String),
    #[error("element index {0} is out of range for a poset of size {1}")]
    PivotOutOfRange(usize, usize),
    #[error("poset has {size} elements, above the guard of {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("relation matrix is not a partial order: {0}")]
    NotPartialOrder(&'static str),
    #[error("poset file: {0}")]
    Io(#[from] std::io::Error),
    #[error("poset file: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    labels: Vec<String>,
    // le[i * n + j] is true iff i <= j
    le: Vec<bool>,
}

/// Which residual to extract, with its pivot element(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidualKind {
    /// `X_{≱x}`
    NotGeq(usize),
    /// `X_{<x}`
    StrictlyBelow(usize),
    /// `X_{⊥x}`
    Incomparable(usize),
    /// `X_{≱x_1,…,x_n}`, the intersection of the `NotGeq` residuals.
    NotGeqAll(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Composition {
    DisjointSum,
    LexSum,
    Cartesian,
    LexProduct,
}

impl FinitePoset {
    pub fn empty() -> FinitePoset {
        FinitePoset {
            labels: Vec::new(),
            le: Vec::new(),
        }
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FinitePoset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut le = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                le[i * n + j] = true;
            }
        }
        FinitePoset { labels, le }
    }

    /// The antichain Γ_k.
    pub fn antichain(k: usize) -> FinitePoset {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let mut le = vec![false; k * k];
        for i in 0..k {
            le[i * k + i] = true;
        }
        FinitePoset { labels, le }
    }

    /// Builds a poset from `a <= b` assertions, closing them reflexively and
    /// transitively.
    pub fn from_relations<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
    ) -> Result<FinitePoset, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let n = labels.len();
        let index = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| PosetError::UnknownElement(s.to_string()))
        };
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (a, b) in pairs {
            let (i, j) = (index(a.as_ref())?, index(b.as_ref())?);
            le[i * n + j] = true;
        }
        close_transitively(&mut le, n);
        for i in 0..n {
            for j in i + 1..n {
                if le[i * n + j] && le[j * n + i] {
                    return Err(PosetError::Cycle(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(FinitePoset { labels, le })
    }

    /// Builds a poset from an explicit closed relation, validating the three axioms.
    pub fn from_matrix(labels: Vec<String>, le: Vec<bool>) -> Result<FinitePoset, PosetError> {
        let n = labels.len();
        if le.len() != n * n {
            return Err(PosetError::NotPartialOrder("matrix size does not match labels"));
        }
        let poset = FinitePoset { labels, le };
        poset.check_axioms()?;
        Ok(poset)
    }

    pub fn check_axioms(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            if !self.le(i, i) {
                return Err(PosetError::NotPartialOrder("not reflexive"));
            }
            for j in 0..n {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Err(PosetError::NotPartialOrder("not antisymmetric"));
                }
                for k in 0..n {
                    if self.le(i, j) && self.le(j, k) && !self.le(i, k) {
                        return Err(PosetError::NotPartialOrder("not transitive"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    #[inline]
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.le(i, j) && !self.le(j, i)
    }

    pub fn is_linear(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| !self.incomparable(i, j)))
    }

    /// The `a <= b` pairs with `a != b`, as label pairs.
    pub fn strict_pairs(&self) -> Vec<(&str, &str)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) {
                    out.push((self.label(i), self.label(j)));
                }
            }
        }
        out
    }

    /// Induced substructure on `indices`, in the given order.
    pub fn induced(&self, indices: &[usize]) -> FinitePoset {
        let m = indices.len();
        let mut le = vec![false; m * m];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                le[a * m + b] = self.le(i, j);
            }
        }
        FinitePoset {
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            le,
        }
    }

    /// Indices of the residual's carrier, in increasing order.
    pub fn residual_indices(&self, kind: &ResidualKind) -> Result<Vec<usize>, PosetError> {
        let n = self.len();
        let check = |x: usize| {
            if x < n {
                Ok(x)
            } else {
                Err(PosetError::PivotOutOfRange(x, n))
            }
        };
        Ok(match kind {
            ResidualKind::NotGeq(x) => {
                let x = check(*x)?;
                (0..n).filter(|&y| !self.le(x, y)).collect()
            }
            ResidualKind::StrictlyBelow(x) => {
                let x = check(*x)?;
                (0..n).filter(|&y| self.lt(y, x)).collect()
            }
            ResidualKind::Incomparable(x) => {
                let x = check(*x)?;
                (0..n).filter(|&y| self.incomparable(x, y)).collect()
            }
            ResidualKind::NotGeqAll(xs) => {
                for &x in xs {
                    check(x)?;
                }
                (0..n)
                    .filter(|&y| xs.iter().all(|&x| !self.le(x, y)))
                    .collect()
            }
        })
    }

    /// The residual as an induced substructure.
    pub fn residual(&self, kind: &ResidualKind) -> Result<FinitePoset, PosetError> {
        Ok(self.induced(&self.residual_indices(kind)?))
    }

    /// Elements incomparable to at least one other element.
    pub fn stripped_indices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| (0..n).any(|y| self.incomparable(x, y)))
            .collect()
    }

    /// `str(X)`: the induced substructure on [`Self::stripped_indices`].
    pub fn stripped(&self) -> FinitePoset {
        self.induced(&self.stripped_indices())
    }

    /// Composes two posets. Sum carriers are tagged `0.a` / `1.b`; product
    /// carriers are pairs `(a,b)` enumerated with the left component varying
    /// slowest.
    pub fn compose(op: Composition, a: &FinitePoset, b: &FinitePoset) -> FinitePoset {
        let (n, m) = (a.len(), b.len());
        match op {
            Composition::DisjointSum | Composition::LexSum => {
                let size = n + m;
                let mut labels = Vec::with_capacity(size);
                labels.extend(a.labels.iter().map(|l| format!("0.{l}")));
                labels.extend(b.labels.iter().map(|l| format!("1.{l}")));
                let mut le = vec![false; size * size];
                for i in 0..n {
                    for j in 0..n {
                        le[i * size + j] = a.le(i, j);
                    }
                }
                for i in 0..m {
                    for j in 0..m {
                        le[(n + i) * size + n + j] = b.le(i, j);
                    }
                }
                if op == Composition::LexSum {
                    for i in 0..n {
                        for j in 0..m {
                            le[i * size + n + j] = true;
                        }
                    }
                }
                FinitePoset { labels, le }
            }
            Composition::Cartesian | Composition::LexProduct => {
                let size = n * m;
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|p| (0..m).map(move |q| (p, q))).collect();
                let labels = pairs
                    .iter()
                    .map(|&(p, q)| format!("({},{})", a.label(p), b.label(q)))
                    .collect();
                let mut le = vec![false; size * size];
                for (x, &(p, q)) in pairs.iter().enumerate() {
                    for (y, &(p2, q2)) in pairs.iter().enumerate() {
                        le[x * size + y] = match op {
                            Composition::Cartesian => a.le(p, p2) && b.le(q, q2),
                            _ => b.lt(q, q2) || (q == q2 && a.le(p, p2)),
                        };
                    }
                }
                FinitePoset { labels, le }
            }
        }
    }

    /// Brute-force isomorphism test with degree pruning.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> Result<bool, PosetError> {
        let n = self.len();
        if n != other.len() {
            return Ok(false);
        }
        if n > ISOMORPHISM_GUARD {
            return Err(PosetError::GuardExceeded {
                size: n,
                guard: ISOMORPHISM_GUARD,
            });
        }
        let sig = |p: &FinitePoset, i: usize| {
            let up = (0..n).filter(|&j| p.le(i, j)).count();
            let down = (0..n).filter(|&j| p.le(j, i)).count();
            (up, down)
        };
        let left: Vec<_> = (0..n).map(|i| sig(self, i)).collect();
        let right: Vec<_> = (0..n).map(|i| sig(other, i)).collect();
        let (mut l, mut r) = (left.clone(), right.clone());
        l.sort_unstable();
        r.sort_unstable();
        if l != r {
            return Ok(false);
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(self.extend_iso(other, 0, &left, &right, &mut map, &mut used))
    }

    fn extend_iso(
        &self,
        other: &FinitePoset,
        i: usize,
        left: &[(usize, usize)],
        right: &[(usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = self.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || left[i] != right[j] {
                continue;
            }
            let consistent = (0..i).all(|k| {
                self.le(k, i) == other.le(map[k], j) && self.le(i, k) == other.le(j, map[k])
            });
            if !consistent {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if self.extend_iso(other, i + 1, left, right, map, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
}

fn close_transitively(le: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if !le[i * n + k] {
                continue;
            }
            for j in 0..n {
                if le[k * n + j] {
                    le[i * n + j] = true;
                }
            }
        }
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))?;
        let pairs = self.strict_pairs();
        if !pairs.is_empty() {
            let rel: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}<{b}")).collect();
            write!(f, " [{}]", rel.join(" "))?;
        }
        Ok(())
    }
}
