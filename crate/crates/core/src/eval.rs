//! Applying rules to integers: digit-wise evaluation, the k-argument
//! generalization, and n-fold iteration.

use crate::digits::{digits_unchecked, horner};
use crate::rule::Rule;
use crate::{Error, IvtInt, Result, Value};

/// Applies the rule to every digit of the *minimal* expansion of `x` and
/// reads the result back as an integer.
///
/// The output has at most as many digits as the input, so it is always
/// below p^digit_length(x). Panics if the result does not fit the scalar
/// type (impossible for [`Value`]).
pub fn eval<T: IvtInt>(rule: &Rule, x: &T) -> T {
    let mapped: Vec<u32> = digits_unchecked(rule.p(), x)
        .into_iter()
        .map(|d| rule.map_digit(d))
        .collect();
    horner(rule.p(), &mapped)
        .expect("eval output does not fit the integer type; use an unbounded scalar input")
}

/// n-fold composition of [`eval`]; `iterate(r, 0, x) = x`.
pub fn iterate<T: IvtInt>(rule: &Rule, n: u64, x: &T) -> T {
    let mut current = x.clone();
    for _ in 0..n {
        current = eval(rule, &current);
    }
    current
}

/// Cap on k-argument truth-table size, `p^k` entries.
const KRULE_MAX_TABLE: u64 = 1 << 24;

/// A k-argument digit map on `{0, …, p-1}^k`, stored as a flat truth table
/// of length p^k.
///
/// The flat position of the tuple `(x₁, …, x_k)` is `Σ x_m·p^(m-1)`: the
/// first argument is the least-significant coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KRule {
    p: u32,
    k: u32,
    table: Vec<u32>,
}

impl KRule {
    pub fn from_table(p: u32, k: u32, table: Vec<u32>) -> Result<Self> {
        let len = Self::table_len(p, k)?;
        if table.len() != len {
            return Err(Error::TableLength {
                expected: len,
                got: table.len(),
            });
        }
        for &entry in &table {
            if entry >= p {
                return Err(Error::TableEntry { entry, p });
            }
        }
        Ok(Self { p, k, table })
    }

    /// Decodes index `j < p^(p^k)` into its flat truth table.
    pub fn from_index(p: u32, k: u32, index: &Value) -> Result<Self> {
        let len = Self::table_len(p, k)?;
        let bound = Value::from(p).pow(len as u32);
        if *index >= bound {
            return Err(Error::IndexOutOfRange {
                index: index.clone(),
                bound,
            });
        }
        let mut table = digits_unchecked(p, index);
        table.resize(len, 0);
        Ok(Self { p, k, table })
    }

    fn table_len(p: u32, k: u32) -> Result<usize> {
        if p < 2 {
            return Err(Error::InvalidBase { p });
        }
        if k < 1 {
            return Err(Error::BoundTooSmall {
                name: "k",
                min: 1,
                got: 0,
            });
        }
        let len = u64::from(p)
            .checked_pow(k)
            .filter(|&l| l <= KRULE_MAX_TABLE)
            .ok_or(Error::EnumerationTooLarge {
                required: Value::from(p).pow(k),
                budget: KRULE_MAX_TABLE,
            })?;
        Ok(len as usize)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn index(&self) -> Value {
        horner(self.p, &self.table).expect("BigUint arithmetic cannot overflow")
    }
}

/// k-argument evaluation: all arguments are padded with most-significant
/// zeros to the longest argument's digit length, the digit map is applied
/// position by position, and the result is read back as an integer.
pub fn eval_k<T: IvtInt>(rule: &KRule, xs: &[T]) -> Result<T> {
    if xs.len() != rule.k() as usize {
        return Err(Error::ArityMismatch {
            expected: rule.k(),
            got: xs.len(),
        });
    }
    let digit_vecs: Vec<Vec<u32>> = xs
        .iter()
        .map(|x| digits_unchecked(rule.p(), x))
        .collect();
    let width = digit_vecs.iter().map(Vec::len).max().unwrap_or(1);
    let p = u64::from(rule.p());
    let mut mapped = Vec::with_capacity(width);
    for position in 0..width {
        let mut flat = 0u64;
        let mut weight = 1u64;
        for dv in &digit_vecs {
            let digit = dv.get(position).copied().unwrap_or(0);
            flat += u64::from(digit) * weight;
            weight *= p;
        }
        mapped.push(rule.table()[flat as usize]);
    }
    horner(rule.p(), &mapped).ok_or(Error::Overflow { op: "eval_k" })
}
