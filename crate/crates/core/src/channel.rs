//! Single-edit channel and end-to-end trials.
//!
//! Each trial draws from its own ChaCha stream, keyed by the run seed and the
//! trial index, so a run is reproducible regardless of how trials are
//! scheduled across threads.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::binary::{correct_binary, encode_binary, extract_binary, BinaryVtParams, BinaryWord};
use crate::bits::format_bits;
use crate::error::{Result, VtError};
use crate::qary::{correct_q, encode_q, extract_q, QaryVtParams, QaryWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelEvent {
    Identity,
    Deletion {
        position: usize,
    },
    /// Inserts `symbol` before `position`; `position = len` appends.
    Insertion {
        position: usize,
        symbol: u32,
    },
}

impl fmt::Display for ChannelEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelEvent::Identity => write!(f, "identity"),
            ChannelEvent::Deletion { position } => write!(f, "delete@{position}"),
            ChannelEvent::Insertion { position, symbol } => write!(f, "insert {symbol}@{position}"),
        }
    }
}

/// A word the channel can edit.
pub trait Editable: Sized {
    fn alphabet(&self) -> u32;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn remove_at(&self, position: usize) -> Self;
    fn insert_at(&self, position: usize, symbol: u32) -> Self;
}

impl Editable for BinaryWord {
    fn alphabet(&self) -> u32 {
        2
    }
    fn len(&self) -> usize {
        BinaryWord::len(self)
    }
    fn remove_at(&self, position: usize) -> Self {
        let mut bits = self.bits().to_vec();
        bits.remove(position);
        BinaryWord::from_raw(bits)
    }
    fn insert_at(&self, position: usize, symbol: u32) -> Self {
        let mut bits = self.bits().to_vec();
        bits.insert(position, symbol as u8);
        BinaryWord::from_raw(bits)
    }
}

impl Editable for QaryWord {
    fn alphabet(&self) -> u32 {
        self.q()
    }
    fn len(&self) -> usize {
        QaryWord::len(self)
    }
    fn remove_at(&self, position: usize) -> Self {
        let mut symbols = self.symbols().to_vec();
        symbols.remove(position);
        QaryWord::from_raw(self.q(), symbols)
    }
    fn insert_at(&self, position: usize, symbol: u32) -> Self {
        let mut symbols = self.symbols().to_vec();
        symbols.insert(position, symbol);
        QaryWord::from_raw(self.q(), symbols)
    }
}

pub fn apply_channel<W: Editable + Clone>(word: &W, event: ChannelEvent) -> Result<W> {
    let len = word.len();
    match event {
        ChannelEvent::Identity => Ok(word.clone()),
        ChannelEvent::Deletion { position } if position < len => Ok(word.remove_at(position)),
        ChannelEvent::Deletion { position } => Err(VtError::InvalidEvent {
            len,
            reason: format!("deletion position {position} is past the end"),
        }),
        ChannelEvent::Insertion { position, .. } if position > len => Err(VtError::InvalidEvent {
            len,
            reason: format!("insertion position {position} is past the end"),
        }),
        ChannelEvent::Insertion { symbol, .. } if symbol >= word.alphabet() => {
            Err(VtError::InvalidEvent {
                len,
                reason: format!("symbol {symbol} is outside Z_{}", word.alphabet()),
            })
        }
        ChannelEvent::Insertion { position, symbol } => Ok(word.insert_at(position, symbol)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelKind {
    Identity,
    Deletion,
    Insertion,
    /// Deletion or insertion with equal probability.
    Mixed,
}

impl FromStr for ChannelKind {
    type Err = VtError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(ChannelKind::Identity),
            "deletion" => Ok(ChannelKind::Deletion),
            "insertion" => Ok(ChannelKind::Insertion),
            "mixed" => Ok(ChannelKind::Mixed),
            other => Err(VtError::Parse(format!("unknown channel kind {other:?}"))),
        }
    }
}

/// Draws an event uniformly over positions (and symbols, for insertions).
pub fn draw_event<R: Rng>(rng: &mut R, kind: ChannelKind, len: usize, q: u32) -> ChannelEvent {
    let kind = match kind {
        ChannelKind::Mixed if rng.random::<bool>() => ChannelKind::Deletion,
        ChannelKind::Mixed => ChannelKind::Insertion,
        other => other,
    };
    match kind {
        ChannelKind::Deletion if len > 0 => ChannelEvent::Deletion {
            position: rng.random_range(0..len),
        },
        ChannelKind::Insertion => ChannelEvent::Insertion {
            position: rng.random_range(0..=len),
            symbol: rng.random_range(0..q),
        },
        _ => ChannelEvent::Identity,
    }
}

/// The code a simulation runs over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum SimCode {
    Binary { n: usize, a: usize },
    Qary { n: usize, q: u32, a: usize, b: u32 },
}

impl SimCode {
    pub fn binary(n: usize, a: usize) -> Result<Self> {
        BinaryVtParams::new(n, a)?;
        Ok(SimCode::Binary { n, a })
    }

    pub fn qary(n: usize, q: u32, a: usize, b: u32) -> Result<Self> {
        QaryVtParams::new(n, q, a, b)?;
        Ok(SimCode::Qary { n, q, a, b })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureCase {
    pub trial: u64,
    pub message: String,
    pub event: ChannelEvent,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub code: SimCode,
    pub channel: ChannelKind,
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
    /// Sorted by trial index.
    pub failures: Vec<FailureCase>,
    pub wall_time_ms: f64,
}

impl TrialReport {
    /// Equality ignoring wall-clock time.
    pub fn same_outcome(&self, other: &TrialReport) -> bool {
        TrialReport {
            wall_time_ms: 0.0,
            ..self.clone()
        } == TrialReport {
            wall_time_ms: 0.0,
            ..other.clone()
        }
    }
}

enum Codec {
    Binary(BinaryVtParams),
    Qary(QaryVtParams),
}

impl Codec {
    fn new(code: &SimCode) -> Result<Self> {
        Ok(match *code {
            SimCode::Binary { n, a } => Codec::Binary(BinaryVtParams::new(n, a)?),
            SimCode::Qary { n, q, a, b } => Codec::Qary(QaryVtParams::new(n, q, a, b)?),
        })
    }

    fn k(&self) -> usize {
        match self {
            Codec::Binary(p) => p.k(),
            Codec::Qary(p) => p.k(),
        }
    }

    /// Runs one trial; the outcome is `Ok(true)` when the message came back intact.
    fn round_trip(
        &self,
        message: &[u8],
        rng: &mut ChaCha8Rng,
        kind: ChannelKind,
    ) -> (ChannelEvent, Result<bool>) {
        let attempt = match self {
            Codec::Binary(p) => binary_round_trip(p, message, rng, kind),
            Codec::Qary(p) => qary_round_trip(p, message, rng, kind),
        };
        attempt.unwrap_or_else(|e| (ChannelEvent::Identity, Err(e)))
    }
}

fn binary_round_trip(
    p: &BinaryVtParams,
    message: &[u8],
    rng: &mut ChaCha8Rng,
    kind: ChannelKind,
) -> Result<(ChannelEvent, Result<bool>)> {
    let sent = encode_binary(message, p)?;
    let event = draw_event(rng, kind, sent.len(), 2);
    let received = apply_channel(&sent, event)?;
    let outcome = correct_binary(&received, p)
        .and_then(|w| extract_binary(&w, p))
        .map(|m| m == message);
    Ok((event, outcome))
}

fn qary_round_trip(
    p: &QaryVtParams,
    message: &[u8],
    rng: &mut ChaCha8Rng,
    kind: ChannelKind,
) -> Result<(ChannelEvent, Result<bool>)> {
    let sent = encode_q(message, p)?;
    let event = draw_event(rng, kind, sent.len(), p.q());
    let received = apply_channel(&sent, event)?;
    let outcome = correct_q(&received, p.code())
        .and_then(|w| extract_q(&w, p))
        .map(|m| m == message);
    Ok((event, outcome))
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Encodes a uniform message, passes it through one channel event, corrects,
/// extracts and compares, `trials` times.
pub fn run_trials(
    code: &SimCode,
    kind: ChannelKind,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    if trials == 0 {
        return Err(VtError::ZeroTrials);
    }
    let codec = Codec::new(code)?;
    let started = Instant::now();

    let mut failures: Vec<FailureCase> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let message: Vec<u8> = (0..codec.k())
                .map(|_| u8::from(rng.random::<bool>()))
                .collect();
            let (event, outcome) = codec.round_trip(&message, &mut rng, kind);
            match outcome {
                Ok(true) => None,
                Ok(false) => Some(FailureCase {
                    trial,
                    message: format_bits(&message),
                    event,
                    error: None,
                }),
                Err(e) => Some(FailureCase {
                    trial,
                    message: format_bits(&message),
                    event,
                    error: Some(e.to_string()),
                }),
            }
        })
        .collect();
    failures.sort_by_key(|f| f.trial);

    let successes = trials - failures.len() as u64;
    Ok(TrialReport {
        code: code.clone(),
        channel: kind,
        seed,
        trials,
        successes,
        rate: successes as f64 / trials as f64,
        failures,
        wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
    })
}
