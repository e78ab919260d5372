//! Look-up tables for the constrained symbols next to dyadic positions.
//!
//! Allowed pairs are `T = {(r, l) : r != 0, l != r - 1}`, ordered
//! lexicographically. With `c_3 = q - 1` the symbol `c_5` may be anything
//! except `q - 2`; those values are ordered ascending.

use serde::Serialize;

use crate::error::{Result, VtError};

fn check_q(q: u32) -> Result<()> {
    if q < 3 {
        Err(VtError::AlphabetTooSmall { q, min: 3 })
    } else {
        Ok(())
    }
}

pub fn canonical_pair(q: u32, index: usize) -> Result<(u32, u32)> {
    check_q(q)?;
    let row = (q - 1) as usize;
    if index >= row * row {
        return Err(VtError::TableIndexOutOfRange {
            index,
            len: row * row,
        });
    }
    let r = (index / row) as u32 + 1;
    let rem = (index % row) as u32;
    let l = if rem < r - 1 { rem } else { rem + 1 };
    Ok((r, l))
}

pub fn canonical_pair_index(q: u32, (r, l): (u32, u32)) -> Result<usize> {
    check_q(q)?;
    for value in [r, l] {
        if value >= q {
            return Err(VtError::InvalidSymbol { value, q });
        }
    }
    if r == 0 || l == r - 1 {
        return Err(VtError::PairOutsideTable { r, l });
    }
    let rem = if l < r - 1 { l } else { l - 1 };
    Ok((r - 1) as usize * (q - 1) as usize + rem as usize)
}

pub fn c5_value(q: u32, index: usize) -> Result<u32> {
    check_q(q)?;
    let len = (q - 1) as usize;
    if index >= len {
        return Err(VtError::TableIndexOutOfRange { index, len });
    }
    let index = index as u32;
    Ok(if index < q - 2 { index } else { index + 1 })
}

pub fn c5_index(q: u32, value: u32) -> Result<usize> {
    check_q(q)?;
    if value >= q {
        return Err(VtError::InvalidSymbol { value, q });
    }
    if value == q - 2 {
        return Err(VtError::ForbiddenC5 { value });
    }
    Ok(if value < q - 2 { value } else { value - 1 } as usize)
}

/// Both tables materialised, for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairTable {
    pub q: u32,
    pub pairs: Vec<(u32, u32)>,
    pub c5_values: Vec<u32>,
}

impl PairTable {
    pub fn new(q: u32) -> Result<Self> {
        check_q(q)?;
        let side = (q - 1) as usize;
        let pairs = (0..side * side)
            .map(|i| canonical_pair(q, i))
            .collect::<Result<_>>()?;
        let c5_values = (0..side).map(|i| c5_value(q, i)).collect::<Result<_>>()?;
        Ok(PairTable {
            q,
            pairs,
            c5_values,
        })
    }
}
