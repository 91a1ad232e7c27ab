use super::{FinitePoset, PosetError, LINEAR_EXTENSION_GUARD};

/// Iterator over all linear extensions of a finite poset, as index orderings.
///
/// Backtracking over minimal elements; each extension is produced exactly once.
pub struct LinearExtensions<'a> {
    poset: &'a FinitePoset,
    // cursor[d]: next candidate to try at depth d
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    placed: Vec<bool>,
    done: bool,
}

impl FinitePoset {
    /// Linear extensions with the default size guard.
    pub fn linear_extensions(&self) -> Result<LinearExtensions<'_>, PosetError> {
        self.linear_extensions_guarded(LINEAR_EXTENSION_GUARD)
    }

    pub fn linear_extensions_guarded(
        &self,
        guard: usize,
    ) -> Result<LinearExtensions<'_>, PosetError> {
        if self.len() > guard {
            return Err(PosetError::GuardExceeded {
                size: self.len(),
                guard,
            });
        }
        Ok(LinearExtensions {
            poset: self,
            prefix: Vec::with_capacity(self.len()),
            cursor: vec![0],
            placed: vec![false; self.len()],
            done: false,
        })
    }

    /// Whether `order` lists every element once, respecting `<=`.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let n = self.len();
        if order.len() != n {
            return false;
        }
        let mut position = vec![usize::MAX; n];
        for (k, &x) in order.iter().enumerate() {
            if x >= n || position[x] != usize::MAX {
                return false;
            }
            position[x] = k;
        }
        (0..n).all(|i| (0..n).all(|j| !self.lt(i, j) || position[i] < position[j]))
    }
}

impl LinearExtensions<'_> {
    fn available(&self, x: usize) -> bool {
        !self.placed[x] && (0..self.poset.len()).all(|y| self.placed[y] || !self.poset.lt(y, x))
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.poset.len();
        if self.done {
            return None;
        }
        loop {
            if self.prefix.len() == n {
                let out = self.prefix.clone();
                // step back so the next call resumes the search
                if let Some(x) = self.prefix.pop() {
                    self.placed[x] = false;
                    self.cursor.pop();
                } else {
                    self.done = true;
                }
                return Some(out);
            }
            let depth = self.prefix.len();
            let start = self.cursor[depth];
            match (start..n).find(|&x| self.available(x)) {
                Some(x) => {
                    self.cursor[depth] = x + 1;
                    self.prefix.push(x);
                    self.placed[x] = true;
                    self.cursor.push(0);
                }
                None => {
                    let Some(x) = self.prefix.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.placed[x] = false;
                    self.cursor.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts() {
        assert_eq!(FinitePoset::chain(3).linear_extensions().unwrap().count(), 1);
        assert_eq!(FinitePoset::antichain(2).linear_extensions().unwrap().count(), 2);
        assert_eq!(FinitePoset::antichain(4).linear_extensions().unwrap().count(), 24);
        assert_eq!(FinitePoset::empty().linear_extensions().unwrap().count(), 1);
    }

    #[test]
    fn n_poset_matches_permutation_filter() {
        let p = FinitePoset::from_relations(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let mut ours: Vec<_> = p.linear_extensions().unwrap().collect();
        let mut brute: Vec<_> = permutations(4)
            .into_iter()
            .filter(|o| p.is_linear_extension(o))
            .collect();
        ours.sort();
        brute.sort();
        assert_eq!(ours.len(), 5);
        assert_eq!(ours, brute);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            FinitePoset::antichain(11).linear_extensions(),
            Err(PosetError::GuardExceeded { size: 11, guard: 10 })
        ));
    }
}
