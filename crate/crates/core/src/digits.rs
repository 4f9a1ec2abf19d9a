//! Base-p digit expansions of non-negative integers, least-significant digit
//! first.
//!
//! LSD-first order is fixed throughout the crate because both the rule
//! encoding and the basis decomposition weight digit i by p^i. The canonical
//! expansion of 0 is the single digit `[0]`: transforms must act on one digit
//! of zero, otherwise the complement rule could not map 0 to 1.

use crate::{Error, IvtInt, Result};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Minimal LSD-first base-p expansion of a non-negative integer.
///
/// Invariants: every digit is `< base`, and the most significant digit is
/// nonzero except for the canonical zero `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    /// Builds a digit string, validating digits and trimming most-significant
    /// zeros down to the minimal form. An empty sequence becomes `[0]`.
    pub fn new(base: u32, mut digits: Vec<u32>) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase { p: base });
        }
        for &d in &digits {
            if d >= base {
                return Err(Error::InvalidDigit { digit: d, base });
            }
        }
        while digits.len() > 1 && *digits.last().unwrap() == 0 {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Digits in LSD-first order.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of digits; at least 1 (zero has one digit).
    pub fn digit_len(&self) -> usize {
        self.digits.len()
    }

    /// Integer value of the expansion.
    ///
    /// Panics if the value does not fit the scalar type; use [`crate::Value`]
    /// for unrestricted inputs.
    pub fn value<T: IvtInt>(&self) -> T {
        horner(self.base, &self.digits)
            .expect("digit string value does not fit the integer type; use an unbounded scalar")
    }

    /// MSD-first rendering for humans: contiguous alphanumerics up to base 36,
    /// dot-separated decimal digits beyond that.
    pub fn msd_first_string(&self) -> String {
        if self.base <= 36 {
            self.digits
                .iter()
                .rev()
                .map(|&d| char::from_digit(d, self.base).expect("digit < base <= 36"))
                .collect()
        } else {
            let parts: Vec<String> = self.digits.iter().rev().map(|d| d.to_string()).collect();
            parts.join(".")
        }
    }
}

/// Minimal LSD-first expansion of `x` in base `p`; `to_digits(p, 0) = [0]`.
pub fn to_digits<T: IvtInt>(p: u32, x: &T) -> Result<DigitString> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    Ok(DigitString {
        base: p,
        digits: digits_unchecked(p, x),
    })
}

/// Value of an LSD-first digit sequence. Leading (most-significant) zeros are
/// permitted and do not affect the value.
pub fn from_digits<T: IvtInt>(base: u32, digits: &[u32]) -> Result<T> {
    if base < 2 {
        return Err(Error::InvalidBase { p: base });
    }
    for &d in digits {
        if d >= base {
            return Err(Error::InvalidDigit { digit: d, base });
        }
    }
    horner(base, digits).ok_or(Error::Overflow { op: "from_digits" })
}

/// Extends the digits of `d` with zeros at the most-significant end to reach
/// exactly `len` digits. The value is unchanged.
pub fn pad_to_length(d: &DigitString, len: usize) -> Result<Vec<u32>> {
    if len < d.digit_len() {
        return Err(Error::PadTooShort {
            len: d.digit_len(),
            requested: len,
        });
    }
    let mut out = d.digits.clone();
    out.resize(len, 0);
    Ok(out)
}

/// Number of digits in the minimal base-p expansion; `digit_length(p, 0) = 1`.
pub fn digit_length<T: IvtInt>(p: u32, x: &T) -> Result<usize> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    let p_t = T::from(p);
    let mut rest = x.clone();
    let mut count = 1;
    while rest >= p_t {
        rest = rest.div_floor(&p_t);
        count += 1;
    }
    Ok(count)
}

/// Digit extraction without base validation, for callers whose base is
/// already known to be >= 2 (rule tables enforce this at construction).
pub(crate) fn digits_unchecked<T: IvtInt>(p: u32, x: &T) -> Vec<u32> {
    debug_assert!(p >= 2);
    let p_t = T::from(p);
    if x.is_zero() {
        return vec![0];
    }
    let mut rest = x.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&p_t);
        out.push(r.to_u32().expect("remainder below base fits u32"));
        rest = q;
    }
    out
}

pub(crate) fn horner<T: IvtInt>(base: u32, digits: &[u32]) -> Option<T> {
    let base_t = T::from(base);
    let mut acc = T::zero();
    for &d in digits.iter().rev() {
        acc = acc.checked_mul(&base_t)?.checked_add(&T::from(d))?;
    }
    Some(acc)
}
