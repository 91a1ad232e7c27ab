use super::FinitePoset;
use crate::matching::maximum_matching;

impl FinitePoset {
    /// Indices sorted so that every element comes after everything below it.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.le(j, i)).count());
        order
    }

    /// Size of a longest chain, with a witness listed bottom-up.
    pub fn longest_chain(&self) -> (usize, Vec<usize>) {
        let n = self.len();
        if n == 0 {
            return (0, Vec::new());
        }
        let mut length = vec![1usize; n];
        let mut parent = vec![None; n];
        for &x in &self.topological_order() {
            for y in 0..n {
                if self.lt(y, x) && length[y] + 1 > length[x] {
                    length[x] = length[y] + 1;
                    parent[x] = Some(y);
                }
            }
        }
        let top = (0..n).max_by_key(|&x| length[x]).expect("nonempty");
        let mut chain = vec![top];
        while let Some(p) = parent[*chain.last().expect("nonempty")] {
            chain.push(p);
        }
        chain.reverse();
        (chain.len(), chain)
    }

    /// Size of a widest antichain, with a witness.
    ///
    /// Dilworth via bipartite matching on the strict order; the antichain is
    /// read off the complement of a König vertex cover.
    pub fn widest_antichain(&self) -> (usize, Vec<usize>) {
        let n = self.len();
        let adjacency: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| self.lt(i, j)).collect())
            .collect();
        let matching = maximum_matching(&adjacency, n);
        let (left, right) = matching.alternating_reach(&adjacency);
        let antichain: Vec<usize> = (0..n).filter(|&x| left[x] && !right[x]).collect();
        debug_assert_eq!(antichain.len(), n - matching.size());
        (antichain.len(), antichain)
    }
}
