//! Code-size census by exhaustive enumeration, and the analytic size and rate
//! bounds the census is checked against.
//!
//! Enumeration is split into fixed index ranges processed in parallel; counts
//! are summed, so results do not depend on the number of worker threads.

use std::io::Write;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::binary::{raw_syndrome, BinaryVtParams, BinaryWord};
use crate::bits::ceil_log2;
use crate::error::{Result, VtError};
use crate::qary::{message_length, raw_aux_syndrome, raw_mod_sum, QaryCode, QaryWord};

/// Largest binary length the enumerator will ever accept.
pub const HARD_MAX_BINARY_N: usize = 28;
/// Largest number of q-ary words the enumerator will ever visit.
pub const HARD_MAX_QARY_WORDS: u64 = 1 << 28;

const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationLimits {
    pub max_binary_n: usize,
    pub max_qary_words: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_binary_n: 20,
            max_qary_words: 1 << 24,
        }
    }
}

impl EnumerationLimits {
    /// Limits above the hard caps are rejected.
    pub fn new(max_binary_n: usize, max_qary_words: u64) -> Result<Self> {
        if max_binary_n > HARD_MAX_BINARY_N {
            return Err(VtError::LimitExceeded {
                words: 1u128 << max_binary_n.min(127),
                limit: 1u128 << HARD_MAX_BINARY_N,
            });
        }
        if max_qary_words > HARD_MAX_QARY_WORDS {
            return Err(VtError::LimitExceeded {
                words: u128::from(max_qary_words),
                limit: u128::from(HARD_MAX_QARY_WORDS),
            });
        }
        Ok(EnumerationLimits {
            max_binary_n,
            max_qary_words,
        })
    }

    fn check_binary(&self, n: usize) -> Result<()> {
        if n > self.max_binary_n {
            return Err(VtError::LimitExceeded {
                words: 1u128.checked_shl(n as u32).unwrap_or(u128::MAX),
                limit: 1u128 << self.max_binary_n,
            });
        }
        Ok(())
    }

    fn check_qary(&self, n: usize, q: u32) -> Result<u64> {
        let words = u128::from(q).checked_pow(n as u32).unwrap_or(u128::MAX);
        if words > u128::from(self.max_qary_words) {
            return Err(VtError::LimitExceeded {
                words,
                limit: u128::from(self.max_qary_words),
            });
        }
        Ok(words as u64)
    }
}

/// Visits every word of `Z_q^n` in parallel chunks and tallies `classify`.
fn tally<F>(n: usize, q: u32, total: u64, buckets: usize, classify: F) -> Vec<u64>
where
    F: Fn(&[u32]) -> usize + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut word = word_at(start, n, q);
            let mut counts = vec![0u64; buckets];
            for _ in start..end {
                counts[classify(&word)] += 1;
                increment(&mut word, q);
            }
            counts
        })
        .reduce(
            || vec![0u64; buckets],
            |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(a, p)| *a += p);
                acc
            },
        )
}

/// The `index`-th word in lexicographic order (last symbol varies fastest).
fn word_at(mut index: u64, n: usize, q: u32) -> Vec<u32> {
    let mut word = vec![0u32; n];
    for slot in word.iter_mut().rev() {
        *slot = (index % u64::from(q)) as u32;
        index /= u64::from(q);
    }
    word
}

fn increment(word: &mut [u32], q: u32) {
    for slot in word.iter_mut().rev() {
        *slot += 1;
        if *slot < q {
            return;
        }
        *slot = 0;
    }
}

fn binary_syndrome_u32(word: &[u32]) -> usize {
    let modulus = word.len() + 1;
    word.iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(0usize, |acc, (i, _)| (acc + i + 1) % modulus)
}

/// `|VT_a(n)|` for every `a` in `0..=n`, indexed by `a`.
pub fn binary_census(n: usize, limits: &EnumerationLimits) -> Result<Vec<u64>> {
    BinaryVtParams::new(n, 0)?;
    limits.check_binary(n)?;
    Ok(tally(n, 2, 1u64 << n, n + 1, binary_syndrome_u32))
}

pub fn enumerate_binary(n: usize, a: usize, limits: &EnumerationLimits) -> Result<u64> {
    BinaryVtParams::new(n, a)?;
    Ok(binary_census(n, limits)?[a])
}

/// Every word of `VT_a(n)`, in lexicographic order.
pub fn list_binary(n: usize, a: usize, limits: &EnumerationLimits) -> Result<Vec<BinaryWord>> {
    BinaryVtParams::new(n, a)?;
    limits.check_binary(n)?;
    Ok((0u64..1 << n)
        .map(|idx| {
            word_at(idx, n, 2)
                .into_iter()
                .map(|b| b as u8)
                .collect::<Vec<u8>>()
        })
        .filter(|bits| raw_syndrome(bits) == a)
        .map(BinaryWord::from_raw)
        .collect())
}

/// Sizes of all `n * q` codes `VT_{a,b}(n)` over `Z_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QaryCensus {
    pub n: usize,
    pub q: u32,
    counts: Vec<u64>,
}

impl QaryCensus {
    pub fn count(&self, a: usize, b: u32) -> u64 {
        self.counts[a * self.q as usize + b as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn min(&self) -> u64 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// `(a, b, count)` in order of `a`, then `b`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        let q = self.q as usize;
        self.counts
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i / q, (i % q) as u32, c))
    }
}

pub fn qary_census(n: usize, q: u32, limits: &EnumerationLimits) -> Result<QaryCensus> {
    QaryCode::new(n, q, 0, 0)?;
    let total = limits.check_qary(n, q)?;
    let qs = q as usize;
    let counts = tally(n, q, total, n * qs, |w| {
        raw_aux_syndrome(w) * qs + raw_mod_sum(w, q) as usize
    });
    Ok(QaryCensus { n, q, counts })
}

pub fn enumerate_q(n: usize, q: u32, a: usize, b: u32, limits: &EnumerationLimits) -> Result<u64> {
    QaryCode::new(n, q, a, b)?;
    Ok(qary_census(n, q, limits)?.count(a, b))
}

/// Every word of `VT_{a,b}(n)`, in lexicographic order.
pub fn list_q(code: &QaryCode, limits: &EnumerationLimits) -> Result<Vec<QaryWord>> {
    let total = limits.check_qary(code.n(), code.q())?;
    let mut word = vec![0u32; code.n()];
    let mut out = Vec::new();
    for _ in 0..total {
        if code.contains_raw(&word) {
            out.push(QaryWord::from_raw(code.q(), word.clone()));
        }
        increment(&mut word, code.q());
    }
    Ok(out)
}

/// `(q - 1)^(2t - 5) * q^(n - 3t + 3)`: a lower bound on every `|VT_{a,b}(n)|`
/// for `n >= 6`, `q >= 4`.
pub fn prop1_lower_bound(n: usize, q: u32) -> Result<BigUint> {
    if q < 4 {
        return Err(VtError::AlphabetTooSmall { q, min: 4 });
    }
    if n < 6 {
        return Err(VtError::LengthTooShort { n, min: 6 });
    }
    let t = ceil_log2(n) as usize;
    Ok(BigUint::from(q - 1).pow((2 * t - 5) as u32) * BigUint::from(q).pow((n + 3 - 3 * t) as u32))
}

/// `2^(2(t - 3)) * 3^(n - 3t + 3)`: the `q = 3` counterpart of
/// [`prop1_lower_bound`].
pub fn ternary_lower_bound(n: usize) -> Result<BigUint> {
    if n < 6 {
        return Err(VtError::LengthTooShort { n, min: 6 });
    }
    let t = ceil_log2(n) as usize;
    Ok((BigUint::one() << (2 * (t - 3))) * BigUint::from(3u32).pow((n + 3 - 3 * t) as u32))
}

/// The lower bound that applies to `q`: [`ternary_lower_bound`] for `q = 3`,
/// [`prop1_lower_bound`] otherwise.
pub fn qary_lower_bound(n: usize, q: u32) -> Result<BigUint> {
    if q == 3 {
        ternary_lower_bound(n)
    } else {
        prop1_lower_bound(n, q)
    }
}

/// `floor((q^n - q) / ((q - 1)(n - 1)))`, an upper bound on the size of any
/// single-deletion-correcting code of length `n >= 2` over `Z_q`.
pub fn deletion_upper_bound(n: usize, q: u32) -> Result<BigUint> {
    if q < 2 {
        return Err(VtError::AlphabetTooSmall { q, min: 2 });
    }
    if n < 2 {
        return Err(VtError::LengthTooShort { n, min: 2 });
    }
    let qn = BigUint::from(q).pow(n as u32);
    Ok((qn - q) / (BigUint::from(q - 1) * BigUint::from(n - 1)))
}

/// `2^n / (n + 1) -+ 2^((n + 1) / 3)`.
pub fn binary_size_bounds(n: usize) -> (f64, f64) {
    let centre = 2f64.powi(n as i32) / (n as f64 + 1.0);
    let spread = 2f64.powf((n as f64 + 1.0) / 3.0);
    (centre - spread, centre + spread)
}

fn log2_big(x: &BigUint) -> f64 {
    // Keep the top 64 bits so the conversion never overflows f64.
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().unwrap_or(0.0).log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(0.0).log2() + shift as f64
}

/// Rates (bits per symbol) of the encoder and the bounds around it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateReport {
    pub n: usize,
    pub q: u32,
    pub t: usize,
    pub k: usize,
    /// `k / n`.
    pub r_encoder: f64,
    /// Upper bound on the rate of the smallest VT code of length `n`.
    pub rmin_upper: f64,
    /// Upper bound on the rate of any single-deletion-correcting code.
    pub rmax_upper: f64,
    /// Rate implied by the guaranteed code size (`log2(bound) / n`); absent
    /// for binary codes.
    pub lower_bound_rate: Option<f64>,
    /// Closed-form lower bound on the `q = 3` encoder rate.
    pub ternary_rate_lower: Option<f64>,
}

pub fn rate_bounds(n: usize, q: u32) -> Result<RateReport> {
    let nf = n as f64;
    if q == 2 {
        let p = BinaryVtParams::new(n, 0)?;
        if n < 2 {
            return Err(VtError::LengthTooShort { n, min: 2 });
        }
        return Ok(RateReport {
            n,
            q,
            t: p.t(),
            k: p.k(),
            r_encoder: p.k() as f64 / nf,
            rmin_upper: 1.0 - (nf + 1.0).log2() / nf,
            rmax_upper: 1.0 - (nf - 1.0).log2() / nf,
            lower_bound_rate: None,
            ternary_rate_lower: None,
        });
    }

    let k = message_length(n, q)?;
    let t = ceil_log2(n) as usize;
    let lq = f64::from(q).log2();
    let guaranteed = qary_lower_bound(n, q)?;
    Ok(RateReport {
        n,
        q,
        t,
        k,
        r_encoder: k as f64 / nf,
        rmin_upper: lq - nf.log2() / nf - lq / nf,
        rmax_upper: lq - (nf - 1.0).log2() / nf - f64::from(q - 1).log2() / nf,
        lower_bound_rate: Some(log2_big(&guaranteed) / nf),
        ternary_rate_lower: (q == 3).then(|| 3f64.log2() - 2.76 * t as f64 / nf - 2.25 / nf),
    })
}

/// A bound value: exact where the bound is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Bound {
    Integer(u64),
    Real(f64),
}

impl Bound {
    fn as_f64(self) -> f64 {
        match self {
            Bound::Integer(v) => v as f64,
            Bound::Real(v) => v,
        }
    }

    fn render(self) -> String {
        match self {
            Bound::Integer(v) => v.to_string(),
            Bound::Real(v) => format!("{v:.6}"),
        }
    }
}

/// One census row: a code, its enumerated size and the bounds that apply.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CodeCensus {
    pub q: u32,
    pub n: usize,
    pub a: usize,
    pub b: Option<u32>,
    #[serde(rename = "count")]
    pub size: u64,
    pub bound_lower: Option<Bound>,
    pub bound_upper: Option<Bound>,
}

impl CodeCensus {
    pub fn within_bounds(&self) -> bool {
        let size = self.size as f64;
        self.bound_lower.map_or(true, |b| b.as_f64() <= size)
            && self.bound_upper.map_or(true, |b| size <= b.as_f64())
    }
}

/// Census rows for every `VT_a(n)`, with the bounds `2^n/(n+1) -+ 2^((n+1)/3)`.
pub fn census_binary(n: usize, limits: &EnumerationLimits) -> Result<Vec<CodeCensus>> {
    let counts = binary_census(n, limits)?;
    let (lower, upper) = binary_size_bounds(n);
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(a, size)| CodeCensus {
            q: 2,
            n,
            a,
            b: None,
            size,
            bound_lower: Some(Bound::Real(lower)),
            bound_upper: Some(Bound::Real(upper)),
        })
        .collect())
}

/// Census rows for every `VT_{a,b}(n)`. The lower bound is present for
/// `n >= 6`, the deletion-code upper bound for `n >= 2`.
pub fn census_q(n: usize, q: u32, limits: &EnumerationLimits) -> Result<Vec<CodeCensus>> {
    let census = qary_census(n, q, limits)?;
    let as_bound = |x: BigUint| x.to_u64().map(Bound::Integer);
    let lower = if n >= 6 {
        qary_lower_bound(n, q).ok().and_then(as_bound)
    } else {
        None
    };
    let upper = deletion_upper_bound(n, q).ok().and_then(as_bound);
    Ok(census
        .iter()
        .map(|(a, b, size)| CodeCensus {
            q,
            n,
            a,
            b: Some(b),
            size,
            bound_lower: lower,
            bound_upper: upper,
        })
        .collect())
}

/// Column order of [`write_csv`].
pub const CSV_COLUMNS: [&str; 7] = ["q", "n", "a", "b", "count", "bound_lower", "bound_upper"];

/// Writes census rows as CSV with the header [`CSV_COLUMNS`]. Missing values
/// are empty fields; real-valued bounds have six decimals.
pub fn write_csv<W: Write>(rows: &[CodeCensus], out: W) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_COLUMNS)?;
    let opt = |b: Option<Bound>| b.map(Bound::render).unwrap_or_default();
    for row in rows {
        writer.write_record([
            row.q.to_string(),
            row.n.to_string(),
            row.a.to_string(),
            row.b.map(|b| b.to_string()).unwrap_or_default(),
            row.size.to_string(),
            opt(row.bound_lower),
            opt(row.bound_upper),
        ])?;
    }
    writer.flush()
}
