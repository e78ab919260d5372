//! Text forms for bit strings and symbol lists.
//!
//! Bit strings are contiguous `0`/`1` characters, lowest index first.
//! Symbol lists are whitespace-separated decimals.

use crate::error::{Result, VtError};

pub fn parse_bits(text: &str) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|ch| match ch {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(VtError::Parse(format!(
                "unexpected character {other:?} in bit string"
            ))),
        })
        .collect()
}

pub fn format_bits(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

pub fn parse_symbols(text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| VtError::Parse(format!("{tok:?} is not a non-negative integer")))
        })
        .collect()
}

pub fn format_symbols<T: ToString>(symbols: &[T]) -> String {
    symbols
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn check_bits(bits: &[u8]) -> Result<()> {
    match bits.iter().find(|&&b| b > 1) {
        Some(&b) => Err(VtError::InvalidSymbol {
            value: u32::from(b),
            q: 2,
        }),
        None => Ok(()),
    }
}

/// Reads `bits` as a big-endian unsigned integer.
pub(crate) fn bits_to_index(bits: &[u8]) -> usize {
    bits.iter()
        .fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
}

/// Writes `value` as exactly `width` big-endian bits.
pub(crate) fn index_to_bits(value: usize, width: usize, out: &mut Vec<u8>) {
    for shift in (0..width).rev() {
        out.push(((value >> shift) & 1) as u8);
    }
}

/// Number of bits of `x`, i.e. `floor(log2 x) + 1` for `x > 0`.
pub(crate) fn bit_length(x: u64) -> u32 {
    u64::BITS - x.leading_zeros()
}

/// `ceil(log2 x)` for `x >= 1`.
pub(crate) fn ceil_log2(x: usize) -> u32 {
    debug_assert!(x >= 1);
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_strings() {
        assert_eq!(parse_bits("0110").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(format_bits(&[1, 0, 1]), "101");
        assert!(parse_bits("01a").is_err());
        assert_eq!(parse_bits("").unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn symbol_lists() {
        assert_eq!(parse_symbols(" 7 2  0\n63 ").unwrap(), vec![7, 2, 0, 63]);
        assert_eq!(format_symbols(&[7u32, 2, 0]), "7 2 0");
        assert!(parse_symbols("1 -2").is_err());
    }

    #[test]
    fn log_helpers() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(9), 4);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(bit_length(1), 1);
        assert_eq!(bit_length(49), 6);
        let mut out = Vec::new();
        index_to_bits(5, 4, &mut out);
        assert_eq!(out, vec![0, 1, 0, 1]);
        assert_eq!(bits_to_index(&out), 5);
    }
}
