//! Varshamov-Tenengolts codes over binary and q-ary alphabets.
//!
//! * [`binary`]: syndrome, membership, the systematic encoder and single-edit
//!   correction for `VT_a(n)`.
//! * [`qary`]: auxiliary sequences, modular sums, the systematic encoder and
//!   single-edit correction for `VT_{a,b}(n)`.
//! * [`analysis`]: exhaustive enumeration of code sizes and the size and rate
//!   bounds they are checked against.
//! * [`channel`]: seeded single-edit channel trials.

pub mod analysis;
pub mod binary;
pub mod bits;
pub mod channel;
pub mod edit;
pub mod error;
pub mod qary;

pub use binary::{
    correct_binary, correct_binary_fast, encode_binary, extract_binary, is_member, syndrome,
    validate_syndrome_positions, BinaryVtParams, BinaryWord,
};
pub use error::{Result, VtError};
pub use qary::{
    aux_sequence, correct_q, encode_q, extract_q, is_member_q, message_length, mod_sum,
    AuxSequence, PairTable, QaryCode, QaryVtParams, QaryWord,
};
