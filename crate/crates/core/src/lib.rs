//! Digit-wise base-p transforms on the non-negative integers.
//!
//! A *rule* is a map `f : {0, …, p-1} -> {0, …, p-1}`, encoded by the integer
//! `j < p^p` whose i-th base-p digit is `f(i)`. Applying `f` to every digit of
//! the minimal base-p expansion of `x` and reading the result back as an
//! integer gives a transform `ℕ₀ -> ℕ₀`. This crate implements:
//!
//! * [`digits`] — conversion between integers and minimal LSD-first digit
//!   expansions;
//! * [`rule`] — the rule space at fixed p: pointwise mod-p ring and module
//!   operations, basis decomposition, linear/bijective classification, and
//!   embeddings into base p+1;
//! * [`eval`] — evaluation of one- and k-argument rules, and iteration;
//! * [`metric`] — the infimum norm and induced distance on the rule space,
//!   with an exhaustive/sampled triangle-inequality auditor (the triangle
//!   inequality does *not* hold in general; the auditor finds witnesses);
//! * [`derivative`] — discrete left/right derivatives over punctured integer
//!   neighborhoods, as exact rationals;
//! * [`orbit`] / [`census`] — iteration orbits with transient/cycle
//!   decomposition, fixed points, Collatz-like classification, and a
//!   whole-rule-space census.
//!
//! All arithmetic is exact. Algorithms are generic over the integer scalar
//! via [`IvtInt`]; use [`Value`] (an unbounded integer) for full generality
//! or `u64` for bounded scans.

#![forbid(unsafe_code)]

pub mod census;
pub mod derivative;
pub mod digits;
pub mod error;
pub mod eval;
pub mod metric;
pub mod orbit;
pub mod rule;

pub use census::{census, CensusRecord};
pub use derivative::{derivative_at, derivative_sweep, DerivativeReport};
pub use digits::{digit_length, from_digits, pad_to_length, to_digits, DigitString};
pub use error::{Error, Result};
pub use eval::{eval, eval_k, iterate, KRule};
pub use metric::{
    check_triangle, check_triple, distance, distance_with_witness, norm, norm_brute_force,
    TriangleMode, TriangleReport, TriangleViolation,
};
pub use orbit::{classify_rule, fixed_points, orbit, Orbit, RuleClassification};
pub use rule::{
    add_wrap_positions, basis_rules, bijective_rules, embed_basis, embed_extended,
    embed_linearity_failures, enumerate_rules, linear_rules, rule_space_size, BasisCoefficients,
    EmbedLinearityFailure, Rule, RuleEnumeration,
};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, ToPrimitive};
use std::fmt;
use std::hash::Hash;

/// Integer scalar the transforms operate on.
///
/// Implemented by `u64` (fast, for scans whose values are known to stay below
/// 2^64) and by [`Value`] (unbounded). Checked arithmetic keeps the bounded
/// instantiations honest: operations that would overflow fail loudly instead
/// of wrapping.
pub trait IvtInt:
    Integer + Clone + Hash + fmt::Debug + fmt::Display + From<u32> + CheckedAdd + CheckedMul + ToPrimitive
{
}

impl<T> IvtInt for T where
    T: Integer
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + From<u32>
        + CheckedAdd
        + CheckedMul
        + ToPrimitive
{
}

/// Unbounded non-negative integer, the default scalar.
///
/// Rule indices reach p^p, which exceeds 64 bits already at p = 17, so the
/// public API sticks to this alias wherever indices or unrestricted inputs
/// appear.
pub type Value = num_bigint::BigUint;

/// Exact rational used for difference quotients. Never floating point.
pub type Rational = num_rational::BigRational;

/// Default cap on the number of rules an enumeration may materialize.
///
/// The CLI lets the environment override it via `IVT_ENUM_BUDGET`.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000;

/// Default digit bound for metric scans: minima are searched over x < p^4.
pub const DEFAULT_DIGIT_BOUND: u32 = 4;
