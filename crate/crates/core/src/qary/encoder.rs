//! Systematic encoder for q-ary VT codes.
//!
//! Layout of a codeword `c_0 .. c_(n-1)` with `t = ceil(log2 n)`:
//!
//! * dyadic positions `1, 2, 4, .., 2^(t-1)` are reserved: their auxiliary
//!   bits fix the syndrome, their symbols are derived last;
//! * the pairs `(c_(2^j - 1), c_(2^j + 1))` for `j = 2 .. t-1` are drawn from
//!   the allowed pair set, with `c_3 = q - 1`;
//! * `c_0, c_1, c_2` fix the modular sum;
//! * every other position (there are `n - 3t + 3` of them) carries free
//!   message symbols.
//!
//! Message bits are consumed in that order: the free-symbol block, then one
//! block per pair for `j = 3 .. t-1`, then `c_5` (for `q >= 4`).

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::tables::{c5_index, c5_value, canonical_pair, canonical_pair_index};
use super::{QaryCode, QaryWord};
use crate::bits::{bit_length, bits_to_index, ceil_log2, check_bits, index_to_bits};
use crate::error::{Result, VtError};

/// Encoder parameters: a code `VT_{a,b}(n)` plus the systematic layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QaryVtParams {
    code: QaryCode,
    layout: Layout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Layout {
    t: usize,
    free_positions: Vec<usize>,
    free_bits: usize,
    pair_bits: usize,
    c5_bits: usize,
}

impl Layout {
    fn new(n: usize, q: u32) -> Result<Self> {
        if q < 3 {
            return Err(VtError::AlphabetTooSmall { q, min: 3 });
        }
        if n < 6 {
            return Err(VtError::LengthTooShort { n, min: 6 });
        }
        let t = ceil_log2(n) as usize;
        // The last pair straddles 2^(t-1) and needs c_(2^(t-1) + 1) to exist.
        if (1usize << (t - 1)) + 1 > n - 1 {
            return Err(VtError::UnsupportedLength { n });
        }

        let is_pair_slot = |p: usize| (2..t).any(|j| p + 1 == 1 << j || p == (1 << j) + 1);
        let free_positions: Vec<usize> = (1..n)
            .filter(|&p| !p.is_power_of_two() && !is_pair_slot(p))
            .collect();
        debug_assert_eq!(free_positions.len(), n + 3 - 3 * t);

        // floor(m log2 q) = bit length of q^m, minus one.
        let free_bits = BigUint::from(q).pow(free_positions.len() as u32).bits() as usize - 1;
        let side = u64::from(q - 1);
        let pair_bits = bit_length(side * side) as usize - 1;
        let c5_bits = if q == 3 {
            0
        } else {
            bit_length(side) as usize - 1
        };

        let layout = Layout {
            t,
            free_positions,
            free_bits,
            pair_bits,
            c5_bits,
        };
        if layout.k() == 0 {
            return Err(VtError::NoMessageBits { n, q });
        }
        Ok(layout)
    }

    fn pair_count(&self) -> usize {
        self.t - 3
    }

    fn k(&self) -> usize {
        self.free_bits + self.pair_count() * self.pair_bits + self.c5_bits
    }
}

impl QaryVtParams {
    pub fn new(n: usize, q: u32, a: usize, b: u32) -> Result<Self> {
        let layout = Layout::new(n, q)?;
        let code = QaryCode::new(n, q, a, b)?;
        Ok(QaryVtParams { code, layout })
    }

    pub fn code(&self) -> &QaryCode {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.code.n
    }

    pub fn q(&self) -> u32 {
        self.code.q
    }

    pub fn a(&self) -> usize {
        self.code.a
    }

    pub fn b(&self) -> u32 {
        self.code.b
    }

    /// `ceil(log2 n)`.
    pub fn t(&self) -> usize {
        self.layout.t
    }

    /// Message length in bits.
    pub fn k(&self) -> usize {
        self.layout.k()
    }

    /// Positions that carry free message symbols, ascending.
    pub fn free_positions(&self) -> &[usize] {
        &self.layout.free_positions
    }

    /// Message bits carried by the free symbols, pairs and `c_5` respectively.
    pub fn bit_blocks(&self) -> (usize, usize, usize) {
        let l = &self.layout;
        (l.free_bits, l.pair_count() * l.pair_bits, l.c5_bits)
    }
}

/// Number of message bits the encoder maps onto a length-`n` word over `Z_q`.
pub fn message_length(n: usize, q: u32) -> Result<usize> {
    Layout::new(n, q).map(|l| l.k())
}

/// Three distinct symbols `x < y < z` of `Z_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrefixTriple {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

/// Picks distinct `x < y < z` in `Z_q` with `x + y + z = w (mod q)`.
pub fn step6_triple(w: u32, q: u32) -> Result<PrefixTriple> {
    if q < 4 {
        return Err(VtError::AlphabetTooSmall { q, min: 4 });
    }
    if w >= q {
        return Err(VtError::InvalidSymbol { value: w, q });
    }
    Ok(match w {
        1 => PrefixTriple {
            x: 0,
            y: 2,
            z: q - 1,
        },
        2 => PrefixTriple {
            x: 1,
            y: 2,
            z: q - 1,
        },
        _ => PrefixTriple {
            x: 0,
            y: 1,
            z: (w + q - 1) % q,
        },
    })
}

/// Orders a triple as `(c_0, c_1, c_2)` so that `[c_1 >= c_0] = alpha_1` and
/// `[c_2 >= c_1] = alpha_2`.
pub fn arrange_prefix(triple: PrefixTriple, alpha1: u8, alpha2: u8) -> [u32; 3] {
    let PrefixTriple { x, y, z } = triple;
    match (alpha1 != 0, alpha2 != 0) {
        (true, true) => [x, y, z],
        (false, false) => [z, y, x],
        (true, false) => [x, z, y],
        (false, true) => [y, x, z],
    }
}

/// The symbol-level content of a codeword: everything the message determines.
///
/// Each distinct set of choices encodes to a distinct codeword, so the number
/// of valid choices is a lower bound on the code size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolChoices {
    /// Symbols for [`QaryVtParams::free_positions`], in order.
    pub free: Vec<u32>,
    /// `(c_(2^j - 1), c_(2^j + 1))` for `j = 3 .. t-1`.
    pub pairs: Vec<(u32, u32)>,
    /// `c_5`; fixed to 2 when `q = 3`.
    pub c5: u32,
}

/// Intermediate values recorded while encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodeTrace {
    /// The word after the message-carrying symbols and `c_3` are placed.
    pub partial: Vec<Option<u32>>,
    /// Auxiliary bits `alpha_1 .. alpha_(n-1)` with the dyadic ones still zero.
    pub aux_prefill: Vec<u8>,
    pub prefill_syndrome: usize,
    pub deficiency: usize,
    /// Final auxiliary bits.
    pub aux: Vec<u8>,
    /// Required value of `c_0 + c_1 + c_2 (mod q)`.
    pub w: u32,
    /// Whether the ternary `001 -> 110` rewrite of `alpha_1 alpha_2 alpha_3` fired.
    pub ternary_rewrite: bool,
}

impl SymbolChoices {
    fn validate(&self, params: &QaryVtParams) -> Result<()> {
        let q = params.q();
        let layout = &params.layout;
        if self.free.len() != layout.free_positions.len() {
            return Err(VtError::WordLength {
                expected: layout.free_positions.len(),
                actual: self.free.len(),
            });
        }
        if self.pairs.len() != layout.pair_count() {
            return Err(VtError::WordLength {
                expected: layout.pair_count(),
                actual: self.pairs.len(),
            });
        }
        if let Some(&value) = self.free.iter().find(|&&s| s >= q) {
            return Err(VtError::InvalidSymbol { value, q });
        }
        for &pair in &self.pairs {
            canonical_pair_index(q, pair)?;
        }
        if q == 3 {
            if self.c5 != 2 {
                return Err(VtError::ForbiddenC5 { value: self.c5 });
            }
        } else {
            c5_index(q, self.c5)?;
        }
        Ok(())
    }
}

/// Builds the codeword for explicit symbol choices.
pub fn encode_choices(
    choices: &SymbolChoices,
    params: &QaryVtParams,
) -> Result<(QaryWord, EncodeTrace)> {
    choices.validate(params)?;
    let (n, q, t) = (params.n(), params.q(), params.t());

    // Message-carrying symbols.
    let mut partial: Vec<Option<u32>> = vec![None; n];
    for (&pos, &sym) in params.free_positions().iter().zip(&choices.free) {
        partial[pos] = Some(sym);
    }
    for (j, &(r, l)) in (3..t).zip(&choices.pairs) {
        partial[(1 << j) - 1] = Some(r);
        partial[(1 << j) + 1] = Some(l);
    }
    partial[3] = Some(q - 1);
    partial[5] = Some(choices.c5);

    let mut c: Vec<u32> = partial.iter().map(|s| s.unwrap_or(0)).collect();

    // Non-dyadic auxiliary bits; aux[i] is alpha_i and aux[0] is unused.
    let mut aux = vec![0u8; n];
    for i in (3..n).filter(|i| !i.is_power_of_two()) {
        aux[i] = if i == 3 {
            1
        } else if (i - 1).is_power_of_two() {
            u8::from(c[i] >= c[i - 2])
        } else {
            u8::from(c[i] >= c[i - 1])
        };
    }
    let aux_prefill = aux[1..].to_vec();

    // Dyadic auxiliary bits from the binary deficiency.
    let prefill_syndrome = aux
        .iter()
        .enumerate()
        .fold(0usize, |acc, (i, &bit)| (acc + i * usize::from(bit)) % n);
    let deficiency = (params.a() + n - prefill_syndrome) % n;
    for i in 0..t {
        aux[1 << i] = ((deficiency >> i) & 1) as u8;
    }

    // Dyadic symbols c_4, c_8, ..
    let step5 = |c: &mut [u32], aux: &[u8], j: usize| {
        let left = c[(1 << j) - 1];
        c[1 << j] = if aux[1 << j] == 0 { left - 1 } else { left };
    };
    for j in 2..t {
        step5(&mut c, &aux, j);
    }

    let ternary_rewrite = q == 3 && aux[1] == 0 && aux[2] == 0;
    if ternary_rewrite {
        // alpha_1 alpha_2 alpha_3 = 001 -> 110 keeps the syndrome (1 + 2 = 3).
        aux[1] = 1;
        aux[2] = 1;
        aux[3] = 0;
        c[3] = 1;
        step5(&mut c, &aux, 2);
    }

    let tail: u64 = c[3..].iter().map(|&s| u64::from(s)).sum();
    let w = ((u64::from(params.b()) + u64::from(q) - tail % u64::from(q)) % u64::from(q)) as u32;
    let prefix = if q == 3 {
        ternary_prefix(w, aux[1], aux[2])
    } else {
        arrange_prefix(step6_triple(w, q)?, aux[1], aux[2])
    };
    c[..3].copy_from_slice(&prefix);

    let word = QaryWord::from_raw(q, c);
    debug_assert!(
        params.code.contains_raw(word.symbols()),
        "encoder left the code: {word}"
    );
    let trace = EncodeTrace {
        partial,
        aux_prefill,
        prefill_syndrome,
        deficiency,
        aux: aux[1..].to_vec(),
        w,
        ternary_rewrite,
    };
    Ok((word, trace))
}

/// `(c_0, c_1, c_2)` for `q = 3`, with `c_3 = 2` unless the rewrite fired
/// (in which case the auxiliary prefix is already `11`).
fn ternary_prefix(w: u32, alpha1: u8, alpha2: u8) -> [u32; 3] {
    match (alpha1, alpha2) {
        (1, 1) => [(w + 2) % 3, 2, 2],
        (1, 0) => [w, 2, 1],
        (0, 1) => match w {
            0 => [1, 0, 2],
            1 => [2, 0, 2],
            _ => [2, 1, 2],
        },
        _ => unreachable!("alpha_1 = alpha_2 = 0 is rewritten before the prefix is chosen"),
    }
}

fn choices_from_bits(message: &[u8], params: &QaryVtParams) -> Result<SymbolChoices> {
    let q = params.q();
    let layout = &params.layout;
    let (free_block, mut rest) = message.split_at(layout.free_bits);

    let free = to_base_q(free_block, q, layout.free_positions.len());
    let mut pairs = Vec::with_capacity(layout.pair_count());
    for _ in 0..layout.pair_count() {
        let (block, tail) = rest.split_at(layout.pair_bits);
        pairs.push(canonical_pair(q, bits_to_index(block))?);
        rest = tail;
    }
    let c5 = if q == 3 {
        2
    } else {
        c5_value(q, bits_to_index(rest))?
    };
    Ok(SymbolChoices { free, pairs, c5 })
}

fn choices_to_bits(choices: &SymbolChoices, params: &QaryVtParams) -> Result<Vec<u8>> {
    let q = params.q();
    let layout = &params.layout;
    let mut bits = Vec::with_capacity(layout.k());

    let value = from_base_q(&choices.free, q);
    if value.bits() as usize > layout.free_bits {
        return Err(VtError::NotInImage);
    }
    push_biguint_bits(&value, layout.free_bits, &mut bits);

    let limit = |width: usize| 1usize << width;
    for &pair in &choices.pairs {
        let index = canonical_pair_index(q, pair)?;
        if index >= limit(layout.pair_bits) {
            return Err(VtError::NotInImage);
        }
        index_to_bits(index, layout.pair_bits, &mut bits);
    }
    if q != 3 {
        let index = c5_index(q, choices.c5)?;
        if index >= limit(layout.c5_bits) {
            return Err(VtError::NotInImage);
        }
        index_to_bits(index, layout.c5_bits, &mut bits);
    }
    Ok(bits)
}

/// Big-endian bit block to `digits` big-endian base-`q` symbols.
fn to_base_q(bits: &[u8], q: u32, digits: usize) -> Vec<u32> {
    let mut value = bits
        .iter()
        .fold(BigUint::zero(), |acc, &b| (acc << 1u32) + u32::from(b));
    let mut out = vec![0u32; digits];
    for slot in out.iter_mut().rev() {
        *slot = (&value % q).to_u32().expect("remainder below q");
        value /= q;
    }
    debug_assert!(value.is_zero());
    out
}

fn from_base_q(symbols: &[u32], q: u32) -> BigUint {
    symbols.iter().fold(BigUint::zero(), |acc, &s| acc * q + s)
}

fn push_biguint_bits(value: &BigUint, width: usize, out: &mut Vec<u8>) {
    for i in (0..width as u64).rev() {
        out.push(u8::from(value.bit(i)));
    }
}

/// Maps `k` message bits onto a codeword of `VT_{a,b}(n)`.
pub fn encode_q(message: &[u8], params: &QaryVtParams) -> Result<QaryWord> {
    if message.len() != params.k() {
        return Err(VtError::MessageLength {
            expected: params.k(),
            actual: message.len(),
        });
    }
    check_bits(message)?;
    let choices = choices_from_bits(message, params)?;
    encode_choices(&choices, params).map(|(word, _)| word)
}

/// Reads the symbol choices back out of an encoded word.
pub fn extract_choices(word: &QaryWord, params: &QaryVtParams) -> Result<SymbolChoices> {
    let t = params.t();
    let c = word.symbols();
    Ok(SymbolChoices {
        free: params.free_positions().iter().map(|&p| c[p]).collect(),
        pairs: (3..t).map(|j| (c[(1 << j) - 1], c[(1 << j) + 1])).collect(),
        c5: c[5],
    })
}

/// Recovers the message from a codeword produced by [`encode_q`].
///
/// Fails with [`VtError::NotMember`] for words outside the code and with
/// [`VtError::NotInImage`] for members the encoder never produces.
pub fn extract_q(word: &QaryWord, params: &QaryVtParams) -> Result<Vec<u8>> {
    if !super::is_member_q(word, &params.code)? {
        return Err(VtError::NotMember);
    }
    let choices = extract_choices(word, params)?;
    let bits = choices_to_bits(&choices, params)?;
    if encode_q(&bits, params)? != *word {
        return Err(VtError::NotInImage);
    }
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::parse_bits;
    use crate::qary::{aux_sequence, is_member_q, mod_sum};

    fn params(n: usize, q: u32, a: usize, b: u32) -> QaryVtParams {
        QaryVtParams::new(n, q, a, b).unwrap()
    }

    #[test]
    fn message_length_examples() {
        assert_eq!(message_length(16, 8).unwrap(), 28);
        assert_eq!(message_length(8, 4).unwrap(), 5);
        assert_eq!(message_length(16, 3).unwrap(), 13);
        // Power-of-two closed form n log2 q - t(log2 q + 1) - 2(log2 q - 1).
        for (n, q, lg) in [
            (16usize, 8u32, 3usize),
            (8, 4, 2),
            (32, 16, 4),
            (12, 4, 2),
            (40, 64, 6),
        ] {
            let t = ceil_log2(n) as usize;
            assert_eq!(
                message_length(n, q).unwrap(),
                n * lg - t * (lg + 1) - 2 * (lg - 1),
                "n={n} q={q}"
            );
        }
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(
            message_length(9, 4),
            Err(VtError::UnsupportedLength { n: 9 })
        );
        assert_eq!(
            message_length(17, 4),
            Err(VtError::UnsupportedLength { n: 17 })
        );
        assert_eq!(
            message_length(5, 4),
            Err(VtError::LengthTooShort { n: 5, min: 6 })
        );
        assert_eq!(
            message_length(8, 2),
            Err(VtError::AlphabetTooSmall { q: 2, min: 3 })
        );
        assert_eq!(
            message_length(6, 3),
            Err(VtError::NoMessageBits { n: 6, q: 3 })
        );
        assert_eq!(message_length(6, 4).unwrap(), 1);
        assert!(QaryVtParams::new(8, 4, 8, 0).is_err());
        assert!(QaryVtParams::new(8, 4, 7, 4).is_err());
    }

    #[test]
    fn layout_for_running_example() {
        let p = params(16, 8, 0, 1);
        assert_eq!(p.t(), 4);
        assert_eq!(p.free_positions(), &[6, 10, 11, 12, 13, 14, 15]);
        assert_eq!(p.bit_blocks(), (21, 5, 2));
    }

    #[test]
    fn step6_examples() {
        assert_eq!(
            step6_triple(1, 8).unwrap(),
            PrefixTriple { x: 0, y: 2, z: 7 }
        );
        assert_eq!(
            step6_triple(2, 8).unwrap(),
            PrefixTriple { x: 1, y: 2, z: 7 }
        );
        assert_eq!(
            step6_triple(0, 8).unwrap(),
            PrefixTriple { x: 0, y: 1, z: 7 }
        );
        assert!(step6_triple(0, 3).is_err());
        assert!(step6_triple(8, 8).is_err());
    }

    #[test]
    fn step6_all_small_alphabets() {
        for q in 4..=16u32 {
            for w in 0..q {
                let PrefixTriple { x, y, z } = step6_triple(w, q).unwrap();
                assert!(x < y && y < z && z < q);
                assert_eq!((x + y + z) % q, w);
            }
        }
    }

    #[test]
    fn arrange_examples() {
        let t = |x, y, z| PrefixTriple { x, y, z };
        assert_eq!(arrange_prefix(t(0, 2, 7), 0, 0), [7, 2, 0]);
        assert_eq!(arrange_prefix(t(0, 1, 2), 1, 1), [0, 1, 2]);
        assert_eq!(arrange_prefix(t(0, 1, 3), 1, 0), [0, 3, 1]);
        for a1 in 0..2u8 {
            for a2 in 0..2u8 {
                let [c0, c1, c2] = arrange_prefix(t(1, 4, 6), a1, a2);
                assert_eq!(u8::from(c1 >= c0), a1);
                assert_eq!(u8::from(c2 >= c1), a2);
            }
        }
    }

    #[test]
    fn ternary_prefix_sums_and_orders() {
        for w in 0..3 {
            for (a1, a2) in [(1u8, 1u8), (1, 0), (0, 1)] {
                let [c0, c1, c2] = ternary_prefix(w, a1, a2);
                assert_eq!((c0 + c1 + c2) % 3, w, "w={w} alpha={a1}{a2}");
                assert_eq!(u8::from(c1 >= c0), a1);
                assert_eq!(u8::from(c2 >= c1), a2);
                // c_3 = 2 when no rewrite happened, so alpha_3 = 1 holds.
                assert!(c2 <= 2);
            }
        }
    }

    #[test]
    fn encode_small_example() {
        let p = params(8, 4, 0, 0);
        let word = encode_q(&[0, 0, 0, 0, 0], &p).unwrap();
        assert_eq!(word.symbols(), &[2, 1, 0, 3, 2, 0, 0, 0]);
        assert_eq!(extract_q(&word, &p).unwrap(), vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn running_example_with_reference_choices() {
        let p = params(16, 8, 0, 1);
        // The free block of the example message.
        let free = to_base_q(&parse_bits("110001000111010101000").unwrap(), 8, 7);
        assert_eq!(free, vec![6, 1, 0, 7, 2, 5, 0]);

        let choices = SymbolChoices {
            free,
            pairs: vec![(3, 5)],
            c5: 3,
        };
        let (word, trace) = encode_choices(&choices, &p).unwrap();
        let aux_prefill: String = trace.aux_prefill.iter().map(|b| b.to_string()).collect();
        assert_eq!(aux_prefill, "001001001001010");
        assert_eq!(trace.prefill_syndrome, 12);
        assert_eq!(trace.deficiency, 4);
        assert_eq!(trace.w, 1);
        assert_eq!(
            word.symbols(),
            &[7, 2, 0, 7, 7, 3, 6, 3, 2, 5, 1, 0, 7, 2, 5, 0]
        );
        assert_eq!(aux_sequence(&word).syndrome(), 0);
        assert_eq!(mod_sum(&word), 1);
    }

    #[test]
    fn running_example_with_canonical_tables() {
        let p = params(16, 8, 0, 1);
        let message = parse_bits("1100010001110101010001110011").unwrap();
        assert_eq!(message.len(), 28);
        let word = encode_q(&message, &p).unwrap();
        let expected_free = [6, 1, 0, 7, 2, 5, 0];
        for (&pos, &sym) in p.free_positions().iter().zip(&expected_free) {
            assert_eq!(word.symbols()[pos], sym);
        }
        // 11100 = 28 -> (5, 0); 11 = 3 -> c_5 = 3.
        assert_eq!((word.symbols()[7], word.symbols()[9]), (5, 0));
        assert_eq!(word.symbols()[5], 3);
        assert!(is_member_q(&word, p.code()).unwrap());
        assert_eq!(extract_q(&word, &p).unwrap(), message);
    }

    #[test]
    fn ternary_rewrite_branch() {
        // Sweep every syndrome so the rewrite fires; check it keeps the syndrome.
        let mut hit = false;
        for a in 0..10 {
            let p = params(10, 3, a, 0);
            for idx in 0..(1usize << p.k()) {
                let mut bits = Vec::new();
                index_to_bits(idx, p.k(), &mut bits);
                let choices = choices_from_bits(&bits, &p).unwrap();
                let (word, trace) = encode_choices(&choices, &p).unwrap();
                if trace.ternary_rewrite {
                    hit = true;
                    assert_eq!(&trace.aux[..3], &[1, 1, 0]);
                    assert_eq!(word.symbols()[3], 1);
                }
                assert_eq!(aux_sequence(&word).bits(), trace.aux.as_slice());
                assert!(is_member_q(&word, p.code()).unwrap());
            }
        }
        assert!(hit);
    }

    #[test]
    fn extract_rejects_foreign_words() {
        let p = params(8, 4, 0, 0);
        let word = encode_q(&[1, 0, 1, 1, 0], &p).unwrap();
        let other = params(8, 4, 1, 0);
        assert_eq!(extract_q(&word, &other), Err(VtError::NotMember));
        // A member with c_3 != q - 1 is never produced by the encoder.
        let zeros = QaryWord::new(4, vec![0; 8]).unwrap();
        assert_eq!(
            extract_q(&zeros, &params(8, 4, 4, 0)),
            Err(VtError::NotInImage)
        );
        // A member with c_5 = q - 2.
        let forbidden = (0..4u32.pow(8))
            .map(|idx| (0..8).map(|i| (idx >> (2 * i)) & 3).collect::<Vec<u32>>())
            .find(|s| s[5] == 2 && p.code().contains_raw(s))
            .unwrap();
        let forbidden = QaryWord::new(4, forbidden).unwrap();
        assert_eq!(
            extract_q(&forbidden, &p),
            Err(VtError::ForbiddenC5 { value: 2 })
        );
    }

    #[test]
    fn message_errors() {
        let p = params(8, 4, 0, 0);
        assert_eq!(
            encode_q(&[0; 4], &p),
            Err(VtError::MessageLength {
                expected: 5,
                actual: 4
            })
        );
        assert!(encode_q(&[0, 0, 3, 0, 0], &p).is_err());
    }
}
