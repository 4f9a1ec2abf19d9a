//! Error type shared by every module in the crate.

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in digit, rule, metric and orbit operations.
///
/// The variants are deliberately fine-grained: the CLI maps them onto its
/// exit-code contract (invalid input vs. exceeded budget vs. unstable metric).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base p = {p}: base must be >= 2")]
    InvalidBase { p: u32 },

    #[error("digit {digit} out of range for base {base}")]
    InvalidDigit { digit: u32, base: u32 },

    #[error("cannot pad {len} digits to shorter length {requested}")]
    PadTooShort { len: usize, requested: usize },

    #[error("rule index {index} >= p^p = {bound}")]
    IndexOutOfRange { index: BigUint, bound: BigUint },

    #[error("rule table must have {expected} entries, got {got}")]
    TableLength { expected: usize, got: usize },

    #[error("rule table entry {entry} out of range for p = {p}")]
    TableEntry { entry: u32, p: u32 },

    #[error("base mismatch: p = {left} vs p = {right}")]
    BaseMismatch { left: u32, right: u32 },

    #[error("scalar {scalar} out of range for p = {p}")]
    InvalidScalar { scalar: u32, p: u32 },

    #[error("rule index {index} is not 0 or a power of p = {p}; only the basis rules and the zero rule embed directly (use the extended embedding for everything else)")]
    EmbedOutsideBasis { index: BigUint, p: u32 },

    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: u32, got: usize },

    #[error("enumeration of {required} items exceeds budget {budget}")]
    EnumerationTooLarge { required: BigUint, budget: u64 },

    #[error("metric scan over p^(digit_bound + 2) = {p}^{exponent} inputs does not fit 64 bits")]
    ScanTooLarge { p: u32, exponent: u32 },

    #[error("distance minimum did not stabilize: {coarse} over {digit_bound} digits vs {refined} over {digit_bound} + 2 digits")]
    UnstableMetric {
        coarse: BigUint,
        refined: BigUint,
        digit_bound: u32,
    },

    #[error("neighborhood radius must be >= 2, got {radius}")]
    InvalidRadius { radius: u32 },

    #[error("{name} must be >= {min}, got {got}")]
    BoundTooSmall { name: &'static str, min: u64, got: u64 },

    #[error("value does not fit the integer type during {op}")]
    Overflow { op: &'static str },
}
