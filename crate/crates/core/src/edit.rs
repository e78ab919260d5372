//! Distinct single-edit neighbourhoods of a word.
//!
//! Inserting `s` next to an existing `s`, or deleting any symbol of a run,
//! produces the same word. Restricting insertions to the left edge of a run
//! and deletions to its first symbol enumerates every neighbour exactly once.

/// Every distinct word obtained by inserting one symbol of `Z_q` into `word`.
///
/// There are `(len + 1)(q - 1) + 1` of them.
pub fn insertions<T>(word: &[T], q: u32) -> impl Iterator<Item = Vec<T>> + '_
where
    T: Copy + PartialEq + TryFrom<u32>,
{
    (0..=word.len()).flat_map(move |pos| {
        (0..q).filter_map(move |sym| {
            let sym = T::try_from(sym).ok()?;
            if pos > 0 && word[pos - 1] == sym {
                return None;
            }
            let mut out = Vec::with_capacity(word.len() + 1);
            out.extend_from_slice(&word[..pos]);
            out.push(sym);
            out.extend_from_slice(&word[pos..]);
            Some(out)
        })
    })
}

/// Every distinct word obtained by deleting one symbol of `word`, one per run.
pub fn deletions<T>(word: &[T]) -> impl Iterator<Item = Vec<T>> + '_
where
    T: Copy + PartialEq,
{
    (0..word.len()).filter_map(move |pos| {
        if pos > 0 && word[pos - 1] == word[pos] {
            return None;
        }
        let mut out = Vec::with_capacity(word.len() - 1);
        out.extend_from_slice(&word[..pos]);
        out.extend_from_slice(&word[pos + 1..]);
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn naive_insertions(word: &[u32], q: u32) -> HashSet<Vec<u32>> {
        let mut set = HashSet::new();
        for pos in 0..=word.len() {
            for s in 0..q {
                let mut w = word.to_vec();
                w.insert(pos, s);
                set.insert(w);
            }
        }
        set
    }

    fn naive_deletions(word: &[u32]) -> HashSet<Vec<u32>> {
        (0..word.len())
            .map(|pos| {
                let mut w = word.to_vec();
                w.remove(pos);
                w
            })
            .collect()
    }

    #[test]
    fn matches_naive_neighbourhoods() {
        let q = 3u32;
        for len in 0..=6u32 {
            for idx in 0..q.pow(len) {
                let mut rest = idx;
                let word: Vec<u32> = (0..len)
                    .map(|_| {
                        let d = rest % q;
                        rest /= q;
                        d
                    })
                    .collect();
                let ins: Vec<_> = insertions(&word, q).collect();
                let expected = naive_insertions(&word, q);
                assert_eq!(ins.len(), expected.len(), "{word:?}");
                assert_eq!(ins.len(), (word.len() + 1) * (q as usize - 1) + 1);
                assert_eq!(ins.into_iter().collect::<HashSet<_>>(), expected);

                let del: Vec<_> = deletions(&word).collect();
                let expected = naive_deletions(&word);
                assert_eq!(del.len(), expected.len(), "{word:?}");
                assert_eq!(del.into_iter().collect::<HashSet<_>>(), expected);
            }
        }
    }

    #[test]
    fn binary_symbols() {
        let word = [0u8, 1, 1];
        let ins: HashSet<Vec<u8>> = insertions(&word, 2).collect();
        assert_eq!(ins.len(), 5);
        assert!(ins.contains(&vec![0, 1, 1, 1]));
        assert!(ins.contains(&vec![1, 0, 1, 1]));
        assert_eq!(deletions(&word).count(), 2);
    }
}
