use rand::Rng;

use super::{close_transitively, FinitePoset};

/// Every labeled poset on `0..n`, for `n <= 5`.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n <= 5, "all_posets is exhaustive; {n} elements is too many");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                le[i * n + j] = true;
            }
        }
        if let Ok(p) = FinitePoset::from_matrix(labels.clone(), le) {
            out.push(p);
        }
    }
    out
}

/// One representative per isomorphism class of posets of size `n`.
pub fn isomorphism_classes(n: usize) -> Vec<FinitePoset> {
    let mut reps: Vec<FinitePoset> = Vec::new();
    for p in all_posets(n) {
        if !reps
            .iter()
            .any(|r| r.is_isomorphic(&p).expect("within guard"))
        {
            reps.push(p);
        }
    }
    reps
}

/// A random poset on `0..n`: each pair `i < j` (as indices) is related with
/// probability `density`, then closed.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> FinitePoset {
    let mut le = vec![false; n * n];
    for i in 0..n {
        le[i * n + i] = true;
        for j in i + 1..n {
            if rng.gen_bool(density) {
                le[i * n + j] = true;
            }
        }
    }
    close_transitively(&mut le, n);
    FinitePoset {
        labels: (0..n).map(|i| i.to_string()).collect(),
        le,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| isomorphism_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16]);
    }

    #[test]
    fn random_posets_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..8 {
            random_poset(&mut rng, n, 0.3).check_axioms().unwrap();
        }
    }
}
