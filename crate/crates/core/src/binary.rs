//! Binary VT codes.
//!
//! A binary word `s_1 .. s_n` has syndrome `sum(i * s_i) mod (n + 1)` and the
//! code `VT_a(n)` is the set of length-`n` words with syndrome `a`. The
//! systematic encoder writes message bits to the non-dyadic positions and
//! fixes the syndrome with the bits at positions `1, 2, 4, ..`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{ceil_log2, check_bits, format_bits, parse_bits};
use crate::edit;
use crate::error::{Result, VtError};

/// A binary word. Stored 0-based; position `i` in the syndrome is index `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        check_bits(&bits)?;
        Ok(BinaryWord(bits))
    }

    pub fn zeros(len: usize) -> Self {
        BinaryWord(vec![0; len])
    }

    pub(crate) fn from_raw(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinaryWord(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(&self.0))
    }
}

impl FromStr for BinaryWord {
    type Err = VtError;

    fn from_str(s: &str) -> Result<Self> {
        parse_bits(s).map(BinaryWord)
    }
}

/// Parameters of `VT_a(n)` together with the systematic layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryVtParams {
    n: usize,
    a: usize,
}

impl BinaryVtParams {
    pub fn new(n: usize, a: usize) -> Result<Self> {
        if n == 0 {
            return Err(VtError::LengthTooShort { n, min: 1 });
        }
        if a > n {
            return Err(VtError::SyndromeOutOfRange { a, max: n });
        }
        Ok(BinaryVtParams { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of parity bits, `ceil(log2(n + 1))`.
    pub fn t(&self) -> usize {
        ceil_log2(self.n + 1) as usize
    }

    /// Number of message bits, `n - t`.
    pub fn k(&self) -> usize {
        self.n - self.t()
    }

    /// The dyadic positions `1, 2, 4, .., 2^(t-1)` (1-based).
    pub fn dyadic_positions(&self) -> Vec<usize> {
        (0..self.t()).map(|i| 1 << i).collect()
    }

    /// The non-dyadic positions `3, 5, 6, 7, 9, ..` (1-based) carrying the message.
    pub fn message_positions(&self) -> Vec<usize> {
        (1..=self.n).filter(|p| !p.is_power_of_two()).collect()
    }
}

/// `sum(i * s_i) mod (n + 1)` over 1-based positions.
pub fn syndrome(word: &BinaryWord) -> usize {
    raw_syndrome(word.bits())
}

pub(crate) fn raw_syndrome(bits: &[u8]) -> usize {
    let modulus = bits.len() + 1;
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0usize, |acc, (i, _)| (acc + i + 1) % modulus)
}

/// Whether `word` lies in `VT_a(n)` with `n = word.len()`.
pub fn is_member(word: &BinaryWord, a: usize) -> Result<bool> {
    if a > word.len() {
        return Err(VtError::SyndromeOutOfRange { a, max: word.len() });
    }
    Ok(syndrome(word) == a)
}

pub fn encode_binary(message: &[u8], params: &BinaryVtParams) -> Result<BinaryWord> {
    if message.len() != params.k() {
        return Err(VtError::MessageLength {
            expected: params.k(),
            actual: message.len(),
        });
    }
    check_bits(message)?;

    let n = params.n;
    let mut word = vec![0u8; n];
    for (&pos, &bit) in params.message_positions().iter().zip(message) {
        word[pos - 1] = bit;
    }

    let deficiency = (params.a + n + 1 - raw_syndrome(&word)) % (n + 1);
    for i in 0..params.t() {
        word[(1 << i) - 1] = ((deficiency >> i) & 1) as u8;
    }
    Ok(BinaryWord(word))
}

/// Reads the message bits back out of the non-dyadic positions.
pub fn extract_binary(word: &BinaryWord, params: &BinaryVtParams) -> Result<Vec<u8>> {
    if word.len() != params.n {
        return Err(VtError::WordLength {
            expected: params.n,
            actual: word.len(),
        });
    }
    Ok(params
        .message_positions()
        .iter()
        .map(|&p| word.0[p - 1])
        .collect())
}

/// Recovers the codeword of `VT_a(n)` from a word that suffered at most one
/// deletion or insertion, by filtering every distinct one-edit neighbour.
pub fn correct_binary(received: &BinaryWord, params: &BinaryVtParams) -> Result<BinaryWord> {
    let n = params.n;
    let r = received.bits();
    let candidates: Vec<Vec<u8>> = match r.len() {
        len if len == n => {
            return if syndrome(received) == params.a {
                Ok(received.clone())
            } else {
                Err(VtError::NotMember)
            };
        }
        len if len + 1 == n => edit::insertions(r, 2)
            .filter(|c| raw_syndrome(c) == params.a)
            .collect(),
        len if len == n + 1 => edit::deletions(r)
            .filter(|c| raw_syndrome(c) == params.a)
            .collect(),
        actual => return Err(VtError::ReceivedLength { n, actual }),
    };
    single_candidate(candidates).map(BinaryWord)
}

pub(crate) fn single_candidate<T>(mut candidates: Vec<T>) -> Result<T> {
    match candidates.len() {
        0 => Err(VtError::NoCandidate),
        1 => Ok(candidates.pop().unwrap()),
        many => Err(VtError::Ambiguous { candidates: many }),
    }
}

/// Linear-time single-edit decoder for binary VT codes.
///
/// Locates the edited run from the syndrome deficiency and the weight of the
/// received word. The result is checked for membership, so inputs that are not
/// one edit away from the code fail with [`VtError::NoCandidate`].
pub fn correct_binary_fast(received: &BinaryWord, params: &BinaryVtParams) -> Result<BinaryWord> {
    let n = params.n;
    let modulus = n + 1;
    let r = received.bits();
    let weight = received.weight();
    let sum = r
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0usize, |acc, (i, _)| (acc + i + 1) % modulus);

    let restored = match r.len() {
        len if len == n => {
            return if syndrome(received) == params.a {
                Ok(received.clone())
            } else {
                Err(VtError::NotMember)
            };
        }
        len if len + 1 == n => {
            let deficiency = (params.a + modulus - sum) % modulus;
            let mut out = r.to_vec();
            if deficiency <= weight {
                // A 0 went missing with `deficiency` ones to its right.
                let mut ones = 0;
                let mut idx = r.len();
                while ones < deficiency {
                    idx -= 1;
                    ones += usize::from(r[idx]);
                }
                out.insert(idx, 0);
            } else {
                // A 1 went missing with `deficiency - weight - 1` zeros to its left.
                let zeros_left = deficiency - weight - 1;
                let mut zeros = 0;
                let mut idx = 0;
                while zeros < zeros_left {
                    zeros += usize::from(r[idx] == 0);
                    idx += 1;
                }
                out.insert(idx, 1);
            }
            out
        }
        len if len == n + 1 => {
            let excess = (sum + modulus - params.a) % modulus;
            let victim = if excess == 0 || excess == weight {
                // Trailing run (excess 0) or leading run (excess = weight).
                Some(if excess == 0 { r.len() - 1 } else { 0 })
            } else if excess < weight {
                // A 0 with `excess` ones to its right.
                let mut ones = 0;
                (0..r.len()).rev().find(|&i| {
                    ones += usize::from(r[i]);
                    r[i] == 0 && ones == excess
                })
            } else {
                // A 1 with `excess - weight` zeros to its left.
                let mut zeros = 0;
                (0..r.len()).find(|&i| {
                    let hit = r[i] == 1 && zeros == excess - weight;
                    zeros += usize::from(r[i] == 0);
                    hit
                })
            };
            let victim = victim.ok_or(VtError::NoCandidate)?;
            let mut out = r.to_vec();
            out.remove(victim);
            out
        }
        actual => return Err(VtError::ReceivedLength { n, actual }),
    };

    if raw_syndrome(&restored) == params.a {
        Ok(BinaryWord(restored))
    } else {
        Err(VtError::NoCandidate)
    }
}

/// Whether the positions can produce every syndrome: for each `a` in
/// `0..=n` some subset of `positions` sums to `a` modulo `n + 1`.
pub fn validate_syndrome_positions(n: usize, positions: &[usize]) -> Result<bool> {
    if positions.is_empty() {
        return Err(VtError::EmptyPositions);
    }
    let modulus = n + 1;
    let mut seen = vec![false; modulus];
    for &p in positions {
        if p == 0 || p > n {
            return Err(VtError::PositionOutOfRange { position: p, n });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(VtError::DuplicatePosition { position: p });
        }
    }

    let mut reachable = vec![false; modulus];
    reachable[0] = true;
    for &p in positions {
        let before = reachable.clone();
        for (residue, _) in before.iter().enumerate().filter(|(_, &hit)| hit) {
            reachable[(residue + p) % modulus] = true;
        }
    }
    Ok(reachable.into_iter().all(|hit| hit))
}
