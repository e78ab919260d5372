//! q-ary VT codes.
//!
//! A word `s_0 .. s_(n-1)` over `Z_q` is summarised by its auxiliary binary
//! sequence `alpha_1 .. alpha_(n-1)` (with `alpha_i = 1` iff `s_i >= s_(i-1)`)
//! and its modular sum. `VT_{a,b}(n)` holds the words whose auxiliary sequence
//! has binary VT syndrome `a` (modulo `n`) and whose symbols sum to `b` modulo `q`.

mod encoder;
mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binary::{raw_syndrome, single_candidate, BinaryWord};
use crate::bits::format_symbols;
use crate::edit;
use crate::error::{Result, VtError};

pub use encoder::{
    arrange_prefix, encode_choices, encode_q, extract_choices, extract_q, message_length,
    step6_triple, EncodeTrace, PrefixTriple, QaryVtParams, SymbolChoices,
};
pub use tables::{c5_index, c5_value, canonical_pair, canonical_pair_index, PairTable};

/// A word over `Z_q`, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QaryWord {
    q: u32,
    symbols: Vec<u32>,
}

impl QaryWord {
    pub fn new(q: u32, symbols: Vec<u32>) -> Result<Self> {
        if q < 2 {
            return Err(VtError::AlphabetTooSmall { q, min: 2 });
        }
        if let Some(&value) = symbols.iter().find(|&&s| s >= q) {
            return Err(VtError::InvalidSymbol { value, q });
        }
        Ok(QaryWord { q, symbols })
    }

    pub(crate) fn from_raw(q: u32, symbols: Vec<u32>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < q));
        QaryWord { q, symbols }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for QaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.symbols))
    }
}

/// The auxiliary binary sequence of a q-ary word; `bits()[i - 1]` is `alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AuxSequence(BinaryWord);

impl AuxSequence {
    pub fn bits(&self) -> &[u8] {
        self.0.bits()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Binary VT syndrome of the sequence, modulo `len + 1`.
    pub fn syndrome(&self) -> usize {
        raw_syndrome(self.0.bits())
    }

    pub fn as_binary(&self) -> &BinaryWord {
        &self.0
    }
}

impl fmt::Display for AuxSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn aux_sequence(word: &QaryWord) -> AuxSequence {
    AuxSequence(BinaryWord::from_raw(raw_aux(&word.symbols)))
}

fn raw_aux(symbols: &[u32]) -> Vec<u8> {
    symbols.windows(2).map(|w| u8::from(w[1] >= w[0])).collect()
}

/// Auxiliary syndrome computed in one pass, without materialising the sequence.
pub(crate) fn raw_aux_syndrome(symbols: &[u32]) -> usize {
    let modulus = symbols.len().max(1);
    symbols
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] >= w[0])
        .fold(0usize, |acc, (i, _)| (acc + i + 1) % modulus)
}

pub(crate) fn raw_mod_sum(symbols: &[u32], q: u32) -> u32 {
    let q = u64::from(q);
    (symbols.iter().map(|&s| u64::from(s)).sum::<u64>() % q) as u32
}

/// `sum(s_i) mod q`.
pub fn mod_sum(word: &QaryWord) -> u32 {
    raw_mod_sum(&word.symbols, word.q)
}

/// The code `VT_{a,b}(n)` over `Z_q`, with no encoder constraints on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QaryCode {
    n: usize,
    q: u32,
    a: usize,
    b: u32,
}

impl QaryCode {
    pub fn new(n: usize, q: u32, a: usize, b: u32) -> Result<Self> {
        if q < 3 {
            return Err(VtError::AlphabetTooSmall { q, min: 3 });
        }
        if n == 0 {
            return Err(VtError::LengthTooShort { n, min: 1 });
        }
        if a >= n {
            return Err(VtError::SyndromeOutOfRange { a, max: n - 1 });
        }
        if b >= q {
            return Err(VtError::SumOutOfRange { b, q });
        }
        Ok(QaryCode { n, q, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub(crate) fn contains_raw(&self, symbols: &[u32]) -> bool {
        symbols.len() == self.n
            && raw_mod_sum(symbols, self.q) == self.b
            && raw_aux_syndrome(symbols) == self.a
    }
}

pub fn is_member_q(word: &QaryWord, code: &QaryCode) -> Result<bool> {
    if word.q != code.q {
        return Err(VtError::AlphabetMismatch {
            expected: code.q,
            actual: word.q,
        });
    }
    if word.len() != code.n {
        return Err(VtError::WordLength {
            expected: code.n,
            actual: word.len(),
        });
    }
    Ok(code.contains_raw(&word.symbols))
}

/// Recovers the codeword of `VT_{a,b}(n)` from a word that suffered at most
/// one symbol deletion or insertion, by filtering every distinct one-edit
/// neighbour of the received word through the membership test.
pub fn correct_q(received: &QaryWord, code: &QaryCode) -> Result<QaryWord> {
    if received.q != code.q {
        return Err(VtError::AlphabetMismatch {
            expected: code.q,
            actual: received.q,
        });
    }
    let n = code.n;
    let r = &received.symbols;
    let candidates: Vec<Vec<u32>> = match r.len() {
        len if len == n => {
            return if code.contains_raw(r) {
                Ok(received.clone())
            } else {
                Err(VtError::NotMember)
            };
        }
        len if len + 1 == n => edit::insertions(r, code.q)
            .filter(|c| code.contains_raw(c))
            .collect(),
        len if len == n + 1 => edit::deletions(r)
            .filter(|c| code.contains_raw(c))
            .collect(),
        actual => return Err(VtError::ReceivedLength { n, actual }),
    };
    single_candidate(candidates).map(|symbols| QaryWord::from_raw(code.q, symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE_WORD: [u32; 16] = [7, 2, 0, 7, 7, 3, 6, 3, 2, 5, 1, 0, 7, 2, 5, 0];

    fn reference_word() -> QaryWord {
        QaryWord::new(8, REFERENCE_WORD.to_vec()).unwrap()
    }

    #[test]
    fn word_validation() {
        assert_eq!(
            QaryWord::new(4, vec![0, 4]),
            Err(VtError::InvalidSymbol { value: 4, q: 4 })
        );
        assert_eq!(
            reference_word().to_string(),
            "7 2 0 7 7 3 6 3 2 5 1 0 7 2 5 0"
        );
    }

    #[test]
    fn aux_examples() {
        assert_eq!(
            aux_sequence(&reference_word()).to_string(),
            "001101001001010"
        );
        let constant = QaryWord::new(5, vec![3; 9]).unwrap();
        assert!(aux_sequence(&constant).bits().iter().all(|&b| b == 1));
        let decreasing = QaryWord::new(9, (0..9).rev().collect()).unwrap();
        assert!(aux_sequence(&decreasing).bits().iter().all(|&b| b == 0));
        assert_eq!(aux_sequence(&decreasing).len(), 8);
    }

    #[test]
    fn aux_syndrome_shortcut_matches() {
        let w = reference_word();
        assert_eq!(raw_aux_syndrome(w.symbols()), aux_sequence(&w).syndrome());
        assert_eq!(aux_sequence(&w).syndrome(), 0);
    }

    #[test]
    fn mod_sum_examples() {
        assert_eq!(mod_sum(&reference_word()), 1);
        let suffix = QaryWord::new(8, REFERENCE_WORD[3..].to_vec()).unwrap();
        assert_eq!(suffix.symbols().iter().sum::<u32>(), 48);
        assert_eq!(mod_sum(&suffix), 0);
        assert_eq!(mod_sum(&QaryWord::new(5, vec![0; 7]).unwrap()), 0);
    }

    #[test]
    fn membership_examples() {
        let w = reference_word();
        assert!(is_member_q(&w, &QaryCode::new(16, 8, 0, 1).unwrap()).unwrap());
        assert!(!is_member_q(&w, &QaryCode::new(16, 8, 0, 0).unwrap()).unwrap());
        // all-zero word of length 8: aux 1111111, syndrome 28 mod 8 = 4.
        let zeros = QaryWord::new(4, vec![0; 8]).unwrap();
        assert!(is_member_q(&zeros, &QaryCode::new(8, 4, 4, 0).unwrap()).unwrap());
        assert!(is_member_q(&w, &QaryCode::new(15, 8, 0, 1).unwrap()).is_err());
        assert!(is_member_q(&w, &QaryCode::new(16, 9, 0, 1).unwrap()).is_err());
    }

    #[test]
    fn code_validation() {
        assert!(QaryCode::new(16, 2, 0, 0).is_err());
        assert!(QaryCode::new(16, 8, 16, 0).is_err());
        assert!(QaryCode::new(16, 8, 15, 8).is_err());
        assert!(QaryCode::new(0, 8, 0, 0).is_err());
        assert!(QaryCode::new(5, 8, 4, 7).is_ok());
    }

    #[test]
    fn correct_reference_word_after_deletion() {
        let code = QaryCode::new(16, 8, 0, 1).unwrap();
        let w = reference_word();
        let r = QaryWord::new(8, REFERENCE_WORD[1..].to_vec()).unwrap();
        assert_eq!(correct_q(&r, &code).unwrap(), w);
        assert_eq!(correct_q(&w, &code).unwrap(), w);
        let mut longer = REFERENCE_WORD.to_vec();
        longer.insert(5, 6);
        assert_eq!(
            correct_q(&QaryWord::new(8, longer).unwrap(), &code).unwrap(),
            w
        );
    }

    #[test]
    fn correct_error_paths() {
        let code = QaryCode::new(16, 8, 0, 0).unwrap();
        assert_eq!(correct_q(&reference_word(), &code), Err(VtError::NotMember));
        let short = QaryWord::new(8, vec![0; 14]).unwrap();
        assert_eq!(
            correct_q(&short, &code),
            Err(VtError::ReceivedLength { n: 16, actual: 14 })
        );
        let other_q = QaryWord::new(9, vec![0; 16]).unwrap();
        assert!(correct_q(&other_q, &code).is_err());
    }

    #[test]
    fn correct_ternary_n6_exhaustive() {
        let (q, n) = (3u32, 6usize);
        for idx in 0..q.pow(n as u32) {
            let mut rest = idx;
            let symbols: Vec<u32> = (0..n)
                .map(|_| {
                    let d = rest % q;
                    rest /= q;
                    d
                })
                .collect();
            let code =
                QaryCode::new(n, q, raw_aux_syndrome(&symbols), raw_mod_sum(&symbols, q)).unwrap();
            let original = QaryWord::new(q, symbols.clone()).unwrap();
            for pos in 0..n {
                let mut r = symbols.clone();
                r.remove(pos);
                let r = QaryWord::new(q, r).unwrap();
                assert_eq!(correct_q(&r, &code).unwrap(), original);
            }
        }
    }
}
