//! The rule space at fixed base p: all p^p digit maps, their pointwise mod-p
//! algebra, basis decomposition, classification, and base-(p+1) embeddings.
//!
//! A rule is canonically its truth table `(f(0), …, f(p-1))`. The index
//! `j = Σ f(i)·p^i` is derived; under this encoding j = 2 at p = 2 is the
//! identity digit map and j = 1 the complement, and the basis decomposition
//! of a rule is literally the base-p digit expansion of its index.

use crate::digits::{digits_unchecked, horner};
use crate::{Error, Result, Value};

/// A digit map on `{0, …, p-1}` together with its base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    p: u32,
    table: Vec<u32>,
}

impl Rule {
    /// Decodes the rule with index `j`: `table[i] = (j / p^i) mod p`.
    pub fn from_index(p: u32, index: &Value) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase { p });
        }
        let bound = rule_space_size(p);
        if *index >= bound {
            return Err(Error::IndexOutOfRange {
                index: index.clone(),
                bound,
            });
        }
        let mut table = digits_unchecked(p, index);
        table.resize(p as usize, 0);
        Ok(Self { p, table })
    }

    /// Builds a rule from an explicit truth table of length p.
    pub fn from_table(p: u32, table: Vec<u32>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase { p });
        }
        if table.len() != p as usize {
            return Err(Error::TableLength {
                expected: p as usize,
                got: table.len(),
            });
        }
        for &entry in &table {
            if entry >= p {
                return Err(Error::TableEntry { entry, p });
            }
        }
        Ok(Self { p, table })
    }

    /// The additive identity: every digit maps to 0.
    pub fn zero(p: u32) -> Result<Self> {
        Self::from_table(p, vec![0; p as usize])
    }

    /// The identity digit map `i -> i` (index Σ i·p^i).
    pub fn identity(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidBase { p });
        }
        Ok(Self {
            p,
            table: (0..p).collect(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Rule index `Σ table[i]·p^i`, an unbounded integer.
    pub fn index(&self) -> Value {
        horner(self.p, &self.table).expect("BigUint arithmetic cannot overflow")
    }

    pub(crate) fn map_digit(&self, digit: u32) -> u32 {
        debug_assert!(digit < self.p);
        self.table[digit as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&t| t == 0)
    }

    /// True when `table[i] = (i · table[1]) mod p` for every i, i.e. the rule
    /// is one of the p slope maps.
    pub fn is_linear(&self) -> bool {
        let slope = u64::from(self.table[1]);
        self.table
            .iter()
            .enumerate()
            .all(|(i, &t)| u64::from(t) == (i as u64 * slope) % u64::from(self.p))
    }

    /// True when the table is a permutation of `{0, …, p-1}`.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.p as usize];
        for &t in &self.table {
            if seen[t as usize] {
                return false;
            }
            seen[t as usize] = true;
        }
        true
    }

    fn check_same_base(&self, other: &Rule) -> Result<()> {
        if self.p != other.p {
            return Err(Error::BaseMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    /// Pointwise addition mod p.
    pub fn add(&self, other: &Rule) -> Result<Rule> {
        self.check_same_base(other)?;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        Ok(Rule { p: self.p, table })
    }

    /// Pointwise multiplication mod p.
    pub fn mul(&self, other: &Rule) -> Result<Rule> {
        self.check_same_base(other)?;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32)
            .collect();
        Ok(Rule { p: self.p, table })
    }

    /// Additive inverse: `r.add(&r.neg())` is the zero rule.
    pub fn neg(&self) -> Rule {
        let table = self.table.iter().map(|&a| (self.p - a) % self.p).collect();
        Rule { p: self.p, table }
    }

    /// Scalar action of `c ∈ {0, …, p-1}`: every table entry times c, mod p.
    pub fn scalar_mul(&self, c: u32) -> Result<Rule> {
        if c >= self.p {
            return Err(Error::InvalidScalar { scalar: c, p: self.p });
        }
        let table = self
            .table
            .iter()
            .map(|&a| ((u64::from(c) * u64::from(a)) % u64::from(self.p)) as u32)
            .collect();
        Ok(Rule { p: self.p, table })
    }

    /// Coefficients of the rule over the basis `{p^0, …, p^(p-1)}`.
    ///
    /// These are exactly the table entries: reconstructing `Σ aᵢ·p^i` yields
    /// the rule index back.
    pub fn decompose(&self) -> BasisCoefficients {
        BasisCoefficients {
            p: self.p,
            coefficients: self.table.clone(),
        }
    }
}

/// Coefficients `a₀, …, a_{p-1}` of a rule over the indicator basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCoefficients {
    p: u32,
    coefficients: Vec<u32>,
}

impl BasisCoefficients {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    /// `Σ aᵢ·p^i`, the index of the rule these coefficients came from.
    pub fn reconstruct_index(&self) -> Value {
        horner(self.p, &self.coefficients).expect("BigUint arithmetic cannot overflow")
    }
}

/// Number of rules at base p, `p^p`.
pub fn rule_space_size(p: u32) -> Value {
    Value::from(p).pow(p)
}

/// The p basis rules, indices `p^0, p^1, …, p^(p-1)`. Rule `p^i` is the
/// indicator of digit i.
pub fn basis_rules(p: u32) -> Result<Vec<Rule>> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    Ok((0..p as usize)
        .map(|i| {
            let mut table = vec![0; p as usize];
            table[i] = 1;
            Rule { p, table }
        })
        .collect())
}

/// The p linear rules: for each slope s, `table[i] = (i·s) mod p`.
pub fn linear_rules(p: u32) -> Result<Vec<Rule>> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    Ok((0..p)
        .map(|slope| {
            let table = (0..u64::from(p))
                .map(|i| ((i * u64::from(slope)) % u64::from(p)) as u32)
                .collect();
            Rule { p, table }
        })
        .collect())
}

/// All p! rules whose table is a permutation, sorted by index.
pub fn bijective_rules(p: u32, budget: u64) -> Result<Vec<Rule>> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    let count = factorial(p);
    if count > Value::from(budget) {
        return Err(Error::EnumerationTooLarge {
            required: count,
            budget,
        });
    }
    let mut rules: Vec<Rule> = Vec::new();
    let mut table: Vec<u32> = (0..p).collect();
    permutations(&mut table, p as usize, &mut |t| {
        rules.push(Rule {
            p,
            table: t.to_vec(),
        });
    });
    // Index order = lexicographic on the reversed (MSD-first) table.
    rules.sort_by(|a, b| a.table.iter().rev().cmp(b.table.iter().rev()));
    Ok(rules)
}

fn factorial(p: u32) -> Value {
    let mut acc = Value::from(1u32);
    for i in 2..=p {
        acc *= Value::from(i);
    }
    acc
}

// Heap's algorithm; visits each permutation of data[..n] exactly once.
fn permutations(data: &mut [u32], n: usize, visit: &mut impl FnMut(&[u32])) {
    if n <= 1 {
        visit(data);
        return;
    }
    for i in 0..n {
        permutations(data, n - 1, visit);
        if n % 2 == 0 {
            data.swap(i, n - 1);
        } else {
            data.swap(0, n - 1);
        }
    }
}

/// Iterator over all p^p rules in index order.
pub struct RuleEnumeration {
    p: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for RuleEnumeration {
    type Item = Rule;

    fn next(&mut self) -> Option<Rule> {
        let table = self.next.take()?;
        let rule = Rule {
            p: self.p,
            table: table.clone(),
        };
        // Odometer increment on the LSD-first table = +1 on the index.
        let mut table = table;
        let mut done = true;
        for entry in table.iter_mut() {
            *entry += 1;
            if *entry == self.p {
                *entry = 0;
            } else {
                done = false;
                break;
            }
        }
        if !done {
            self.next = Some(table);
        }
        Some(rule)
    }
}

/// Enumerates the full rule space at base p, provided `p^p` fits the budget.
pub fn enumerate_rules(p: u32, budget: u64) -> Result<RuleEnumeration> {
    if p < 2 {
        return Err(Error::InvalidBase { p });
    }
    let count = rule_space_size(p);
    if count > Value::from(budget) {
        return Err(Error::EnumerationTooLarge {
            required: count,
            budget,
        });
    }
    Ok(RuleEnumeration {
        p,
        next: Some(vec![0; p as usize]),
    })
}

/// The basis embedding into base p+1: `p^i -> (p+1)^i` and `0 -> (p+1)^p`.
///
/// Only the basis rules and the zero rule are in its domain; everything else
/// is an error (the linear extension lives in [`embed_extended`]).
pub fn embed_basis(rule: &Rule) -> Result<Rule> {
    let p = rule.p();
    let q = p.checked_add(1).ok_or(Error::InvalidBase { p })?;
    if rule.is_zero() {
        return Rule::from_index(q, &Value::from(q).pow(p));
    }
    let ones: Vec<usize> = rule
        .table
        .iter()
        .enumerate()
        .filter(|(_, &t)| t != 0)
        .map(|(i, _)| i)
        .collect();
    if ones.len() == 1 && rule.table[ones[0]] == 1 {
        return Rule::from_index(q, &Value::from(q).pow(ones[0] as u32));
    }
    Err(Error::EmbedOutsideBasis {
        index: rule.index(),
        p,
    })
}

/// The extension of the embedding to the whole space: reinterpret the table
/// as base-(p+1) coefficients, mapping the new digit p to 0. The image has
/// p^p of the (p+1)^(p+1) target rules, so this is never surjective.
pub fn embed_extended(rule: &Rule) -> Rule {
    let q = rule.p() + 1;
    let mut table = rule.table.clone();
    table.push(0);
    Rule { p: q, table }
}

/// Digit positions where adding two tables wraps mod p. The extended
/// embedding commutes with addition exactly when this is empty.
pub fn add_wrap_positions(r1: &Rule, r2: &Rule) -> Result<Vec<usize>> {
    r1.check_same_base(r2)?;
    Ok(r1
        .table
        .iter()
        .zip(&r2.table)
        .enumerate()
        .filter(|(_, (&a, &b))| a + b >= r1.p)
        .map(|(i, _)| i)
        .collect())
}

/// A scalar/basis combination on which the extended embedding fails to be
/// linear: `embed(a∧r₁ ⊕ b∧r₂) ≠ a∧embed(r₁) ⊕ b∧embed(r₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedLinearityFailure {
    pub a: u32,
    pub b: u32,
    pub i1: usize,
    pub i2: usize,
    pub lhs: Rule,
    pub rhs: Rule,
}

/// Audits linearity of the extended embedding over all scalar pairs in
/// `{0,…,p-1}²` and all basis pairs. The failures are reported, not asserted
/// away: mod-p wraparound on the source side has no counterpart mod p+1, so
/// pairs with `i1 = i2` and `a + b >= p` genuinely fail.
pub fn embed_linearity_failures(p: u32) -> Result<Vec<EmbedLinearityFailure>> {
    let basis = basis_rules(p)?;
    let mut failures = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for (i1, r1) in basis.iter().enumerate() {
                for (i2, r2) in basis.iter().enumerate() {
                    let combined = r1.scalar_mul(a)?.add(&r2.scalar_mul(b)?)?;
                    let lhs = embed_extended(&combined);
                    let rhs = embed_extended(r1)
                        .scalar_mul(a)?
                        .add(&embed_extended(r2).scalar_mul(b)?)?;
                    if lhs != rhs {
                        failures.push(EmbedLinearityFailure {
                            a,
                            b,
                            i1,
                            i2,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUM_BUDGET;

    fn rule(p: u32, j: u64) -> Rule {
        Rule::from_index(p, &Value::from(j)).unwrap()
    }

    #[test]
    fn from_index_examples() {
        assert_eq!(rule(2, 2).table(), &[0, 1]); // identity digit map
        assert_eq!(rule(2, 1).table(), &[1, 0]); // complement
        assert_eq!(rule(3, 5).table(), &[2, 1, 0]);
    }

    #[test]
    fn from_index_rejects_out_of_range() {
        let err = Rule::from_index(2, &Value::from(4u32)).unwrap_err();
        assert_eq!(err.to_string(), "rule index 4 >= p^p = 4");
        assert!(Rule::from_index(2, &Value::from(99u32)).is_err());
        assert!(Rule::from_index(1, &Value::from(0u32)).is_err());
    }

    #[test]
    fn from_table_examples() {
        assert_eq!(
            Rule::from_table(2, vec![1, 0]).unwrap().index(),
            Value::from(1u32)
        );
        assert_eq!(
            Rule::from_table(2, vec![0, 0]).unwrap().index(),
            Value::from(0u32)
        );
        assert_eq!(
            Rule::from_table(3, vec![2, 1, 0]).unwrap().index(),
            Value::from(5u32)
        );
        assert!(matches!(
            Rule::from_table(2, vec![1]),
            Err(Error::TableLength { .. })
        ));
        assert!(matches!(
            Rule::from_table(2, vec![1, 2]),
            Err(Error::TableEntry { entry: 2, p: 2 })
        ));
    }

    // Oracle for the algebra examples: explicit pointwise mod-p table math.
    fn pointwise(p: u32, a: &[u32], b: &[u32], f: impl Fn(u32, u32) -> u32) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| f(x, y) % p).collect()
    }

    #[test]
    fn add_examples() {
        let sum = rule(2, 1).add(&rule(2, 2)).unwrap();
        assert_eq!(sum.table(), pointwise(2, &[1, 0], &[0, 1], |a, b| a + b).as_slice());
        assert_eq!(sum.index(), Value::from(3u32));

        for j in 0..4u64 {
            assert_eq!(rule(2, j).add(&Rule::zero(2).unwrap()).unwrap(), rule(2, j));
        }

        let five = rule(3, 5);
        let doubled = five.add(&five).unwrap();
        assert_eq!(doubled.table(), &[1, 2, 0]);
        assert_eq!(doubled.index(), Value::from(7u32));
    }

    #[test]
    fn mul_examples() {
        let prod = rule(2, 3).mul(&rule(2, 2)).unwrap();
        assert_eq!(prod.index(), Value::from(2u32));

        for j in 0..4u64 {
            assert!(rule(2, j).mul(&Rule::zero(2).unwrap()).unwrap().is_zero());
        }

        let five = rule(3, 5);
        let squared = five.mul(&five).unwrap();
        assert_eq!(squared.table(), &[1, 1, 0]);
        assert_eq!(squared.index(), Value::from(4u32));
    }

    #[test]
    fn neg_examples() {
        assert_eq!(rule(2, 3).neg(), rule(2, 3));
        assert_eq!(rule(3, 5).neg().table(), &[1, 2, 0]);
        assert_eq!(rule(3, 5).neg().index(), Value::from(7u32));
        assert!(Rule::zero(5).unwrap().neg().is_zero());
        for j in 0..27u64 {
            let r = rule(3, j);
            assert!(r.add(&r.neg()).unwrap().is_zero());
        }
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(rule(3, 5).scalar_mul(2).unwrap().index(), Value::from(7u32));
        for j in 0..27u64 {
            assert_eq!(rule(3, j).scalar_mul(1).unwrap(), rule(3, j));
            assert!(rule(3, j).scalar_mul(0).unwrap().is_zero());
        }
        assert!(matches!(
            rule(3, 5).scalar_mul(3),
            Err(Error::InvalidScalar { scalar: 3, p: 3 })
        ));
    }

    #[test]
    fn base_mismatch_rejected() {
        assert!(matches!(
            rule(2, 1).add(&rule(3, 1)),
            Err(Error::BaseMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(rule(2, 3).decompose().coefficients(), &[1, 1]);
        assert_eq!(rule(2, 0).decompose().coefficients(), &[0, 0]);
        assert_eq!(rule(3, 5).decompose().coefficients(), &[2, 1, 0]);
        assert_eq!(rule(3, 5).decompose().reconstruct_index(), Value::from(5u32));
    }

    #[test]
    fn basis_rules_examples() {
        let b2: Vec<Value> = basis_rules(2).unwrap().iter().map(Rule::index).collect();
        assert_eq!(b2, vec![Value::from(1u32), Value::from(2u32)]);
        let b3: Vec<Value> = basis_rules(3).unwrap().iter().map(Rule::index).collect();
        assert_eq!(
            b3,
            vec![Value::from(1u32), Value::from(3u32), Value::from(9u32)]
        );
        assert_eq!(basis_rules(3).unwrap()[0].table(), &[1, 0, 0]);
    }

    #[test]
    fn linear_rules_examples() {
        let l2: Vec<Value> = linear_rules(2).unwrap().iter().map(Rule::index).collect();
        assert_eq!(l2, vec![Value::from(0u32), Value::from(2u32)]);

        let l3 = linear_rules(3).unwrap();
        assert_eq!(l3.len(), 3);
        assert_eq!(l3[2].table(), &[0, 2, 1]);
        assert_eq!(l3[2].index(), Value::from(15u32));

        assert_eq!(linear_rules(5).unwrap().len(), 5);

        // is_linear agrees with membership, exhaustively at p = 3.
        let linear_set: Vec<Rule> = linear_rules(3).unwrap();
        for r in enumerate_rules(3, DEFAULT_ENUM_BUDGET).unwrap() {
            assert_eq!(r.is_linear(), linear_set.contains(&r), "rule {:?}", r);
        }
    }

    #[test]
    fn bijective_rules_examples() {
        let b2: Vec<Value> = bijective_rules(2, DEFAULT_ENUM_BUDGET)
            .unwrap()
            .iter()
            .map(Rule::index)
            .collect();
        assert_eq!(b2, vec![Value::from(1u32), Value::from(2u32)]);
        assert_eq!(bijective_rules(3, DEFAULT_ENUM_BUDGET).unwrap().len(), 6);
        assert!(!rule(2, 3).is_bijective());

        // Sorted by index, all distinct, all permutations.
        let b4 = bijective_rules(4, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(b4.len(), 24);
        let indices: Vec<Value> = b4.iter().map(Rule::index).collect();
        let mut sorted = indices.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(indices, sorted);
        assert!(b4.iter().all(Rule::is_bijective));
    }

    #[test]
    fn bijective_rules_budget() {
        // 9! = 362880 exceeds the default budget of 100000.
        assert!(matches!(
            bijective_rules(9, DEFAULT_ENUM_BUDGET),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(bijective_rules(8, DEFAULT_ENUM_BUDGET).is_ok());
    }

    #[test]
    fn enumerate_examples() {
        let all: Vec<Rule> = enumerate_rules(2, DEFAULT_ENUM_BUDGET).unwrap().collect();
        assert_eq!(all.len(), 4);
        for (j, r) in all.iter().enumerate() {
            assert_eq!(r.index(), Value::from(j));
        }
        assert_eq!(enumerate_rules(3, DEFAULT_ENUM_BUDGET).unwrap().count(), 27);
        assert_eq!(enumerate_rules(5, DEFAULT_ENUM_BUDGET).unwrap().count(), 3125);
        assert!(matches!(
            enumerate_rules(7, DEFAULT_ENUM_BUDGET),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn embed_basis_examples() {
        assert_eq!(embed_basis(&rule(2, 2)).unwrap().index(), Value::from(3u32));
        assert_eq!(embed_basis(&rule(2, 0)).unwrap().index(), Value::from(9u32));
        assert_eq!(embed_basis(&rule(2, 1)).unwrap().index(), Value::from(1u32));
        assert!(matches!(
            embed_basis(&rule(2, 3)),
            Err(Error::EmbedOutsideBasis { .. })
        ));
    }

    #[test]
    fn embed_extended_examples() {
        let e = embed_extended(&rule(2, 3));
        assert_eq!(e.p(), 3);
        assert_eq!(e.table(), &[1, 1, 0]);
        assert_eq!(e.index(), Value::from(4u32));

        assert!(embed_extended(&rule(2, 0)).is_zero());

        let image: std::collections::BTreeSet<Value> = (0..4u64)
            .map(|j| embed_extended(&rule(2, j)).index())
            .collect();
        assert_eq!(image.len(), 4);
        assert!(image.iter().all(|j| *j < rule_space_size(3)));
    }

    #[test]
    fn embed_addition_wrap_characterization() {
        // embed(r1 + r2) = embed(r1) + embed(r2) iff no entry-wise sum wraps.
        for j1 in 0..27u64 {
            for j2 in 0..27u64 {
                let (r1, r2) = (rule(3, j1), rule(3, j2));
                let wraps = add_wrap_positions(&r1, &r2).unwrap();
                let lhs = embed_extended(&r1.add(&r2).unwrap());
                let rhs = embed_extended(&r1).add(&embed_extended(&r2)).unwrap();
                assert_eq!(lhs == rhs, wraps.is_empty(), "j1={j1} j2={j2}");
            }
        }
    }

    #[test]
    fn embed_linearity_failures_characterization() {
        // Failures are exactly the pairs with i1 = i2 and a + b >= p.
        for p in [2u32, 3] {
            let failures = embed_linearity_failures(p).unwrap();
            let mut expected = Vec::new();
            for a in 0..p {
                for b in 0..p {
                    for i in 0..p as usize {
                        if a + b >= p {
                            expected.push((a, b, i, i));
                        }
                    }
                }
            }
            let got: Vec<(u32, u32, usize, usize)> =
                failures.iter().map(|f| (f.a, f.b, f.i1, f.i2)).collect();
            assert_eq!(got, expected, "p={p}");
        }
    }
}
