//! Maximum bipartite matching (Kuhn's augmenting paths), shared by the
//! antichain computation and the multiset embedding test.

/// A maximum matching in a bipartite graph given by adjacency lists from the
/// left side into `0..right_len`.
#[derive(Debug, Clone)]
pub(crate) struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().filter(|m| m.is_some()).count()
    }

    /// Left vertices reachable from unmatched left vertices by alternating
    /// paths, and the right vertices visited on the way (König's construction).
    pub fn alternating_reach(&self, adjacency: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut left = vec![false; adjacency.len()];
        let mut right = vec![false; self.right_to_left.len()];
        let mut stack: Vec<usize> = (0..adjacency.len())
            .filter(|&u| self.left_to_right[u].is_none())
            .collect();
        for &u in &stack {
            left[u] = true;
        }
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if right[v] || self.left_to_right[u] == Some(v) {
                    continue;
                }
                right[v] = true;
                if let Some(w) = self.right_to_left[v] {
                    if !left[w] {
                        left[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        (left, right)
    }
}

pub(crate) fn maximum_matching(adjacency: &[Vec<usize>], right_len: usize) -> Matching {
    let mut m = Matching {
        left_to_right: vec![None; adjacency.len()],
        right_to_left: vec![None; right_len],
    };
    for u in 0..adjacency.len() {
        let mut seen = vec![false; right_len];
        augment(u, adjacency, &mut m, &mut seen);
    }
    m
}

fn augment(u: usize, adjacency: &[Vec<usize>], m: &mut Matching, seen: &mut [bool]) -> bool {
    for &v in &adjacency[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match m.right_to_left[v] {
            None => true,
            Some(w) => augment(w, adjacency, m, seen),
        };
        if free {
            m.left_to_right[u] = Some(v);
            m.right_to_left[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_perfect_matching_needing_augmentation() {
        // 0-{0,1}, 1-{0}: greedy takes 0-0 first, must reroute
        let adj = vec![vec![0, 1], vec![0]];
        let m = maximum_matching(&adj, 2);
        assert_eq!(m.size(), 2);
        assert_eq!(m.left_to_right, vec![Some(1), Some(0)]);
    }

    #[test]
    fn deficient_graph() {
        let adj = vec![vec![0], vec![0], vec![1]];
        assert_eq!(maximum_matching(&adj, 2).size(), 2);
        assert_eq!(maximum_matching(&[vec![], vec![]], 3).size(), 0);
    }
}
