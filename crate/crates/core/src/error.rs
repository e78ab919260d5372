use thiserror::Error;

/// Errors produced by the codecs, the enumerators and the channel simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VtError {
    #[error("symbol {value} is outside the alphabet Z_{q}")]
    InvalidSymbol { value: u32, q: u32 },

    #[error("alphabet size {q} is not supported (need q >= {min})")]
    AlphabetTooSmall { q: u32, min: u32 },

    #[error("word is over Z_{actual} but the code is over Z_{expected}")]
    AlphabetMismatch { expected: u32, actual: u32 },

    #[error("code length {n} is too short (need n >= {min})")]
    LengthTooShort { n: usize, min: usize },

    #[error("code length {n} = 2^m + 1 is not supported by the q-ary encoder")]
    UnsupportedLength { n: usize },

    #[error("parameters n={n}, q={q} leave no room for message bits")]
    NoMessageBits { n: usize, q: u32 },

    #[error("syndrome {a} out of range (must be at most {max})")]
    SyndromeOutOfRange { a: usize, max: usize },

    #[error("modular sum {b} out of range for q={q}")]
    SumOutOfRange { b: u32, q: u32 },

    #[error("message has {actual} bits, expected {expected}")]
    MessageLength { expected: usize, actual: usize },

    #[error("word has length {actual}, expected {expected}")]
    WordLength { expected: usize, actual: usize },

    #[error("received word of length {actual} cannot come from a length-{n} codeword by one edit")]
    ReceivedLength { n: usize, actual: usize },

    #[error("word is not a member of the code")]
    NotMember,

    #[error("no codeword is within one edit of the received word")]
    NoCandidate,

    #[error("{candidates} codewords are within one edit of the received word")]
    Ambiguous { candidates: usize },

    #[error("pair ({r}, {l}) is not an allowed adjacent pair")]
    PairOutsideTable { r: u32, l: u32 },

    #[error("table index {index} out of range (table has {len} entries)")]
    TableIndexOutOfRange { index: usize, len: usize },

    #[error("symbol {value} is not an allowed value for c_5")]
    ForbiddenC5 { value: u32 },

    #[error("word is not in the image of the systematic encoder")]
    NotInImage,

    #[error("position {position} out of range 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("position {position} listed more than once")]
    DuplicatePosition { position: usize },

    #[error("position set is empty")]
    EmptyPositions,

    #[error("invalid channel event for a word of length {len}: {reason}")]
    InvalidEvent { len: usize, reason: String },

    #[error("enumeration of {words} words exceeds the limit of {limit}")]
    LimitExceeded { words: u128, limit: u128 },

    #[error("at least one trial is required")]
    ZeroTrials,

    #[error("parse error: {0}")]
    Parse(String),
}

impl VtError {
    /// True for failures of the codec itself (as opposed to bad parameters
    /// or malformed input).
    pub fn is_codec_failure(&self) -> bool {
        matches!(
            self,
            VtError::NotMember
                | VtError::NoCandidate
                | VtError::Ambiguous { .. }
                | VtError::PairOutsideTable { .. }
                | VtError::ForbiddenC5 { .. }
                | VtError::NotInImage
        )
    }
}

pub type Result<T> = std::result::Result<T, VtError>;
