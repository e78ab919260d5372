//! Deterministic inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random messages of `k` bits, the same for a given seed.
pub fn messages(k: usize, count: usize, seed: u64) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..k).map(|_| rng.random_range(0..2u8)).collect())
        .collect()
}

/// Deletes one symbol from each word at a seeded position.
pub fn with_deletions<T: Clone>(words: &[Vec<T>], seed: u64) -> Vec<Vec<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    words
        .iter()
        .map(|w| {
            let mut w = w.clone();
            w.remove(rng.random_range(0..w.len()));
            w
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(messages(28, 4, 1), messages(28, 4, 1));
        assert_ne!(messages(28, 4, 1), messages(28, 4, 2));
        let words = vec![vec![1u32, 2, 3]; 5];
        assert!(with_deletions(&words, 3).iter().all(|w| w.len() == 2));
    }
}
