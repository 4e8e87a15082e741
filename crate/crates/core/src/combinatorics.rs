//! Figurate numbers, non-decreasing sequences, and the Pascal-triangle
//! identity
//!
//! `C(2n, n) = Σ_{i=0..n} C(2n−r−1−i, n−r−1) · P^(r)_{i+1}`
//!
//! together with a brute-force oracle that partitions the non-decreasing
//! sequences the way the counting argument does.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::bounds::binom;
use crate::error::{Error, Result};
use crate::par::{map_range, Execution};
use crate::tuples::nondecreasing_tuples;

/// Maximum number of sequences any enumeration will produce.
pub const ENUMERATION_CAP: u128 = 1_000_000;

/// `P_k^(r) = C(k+r−1, r)`: triangular numbers at `r = 2`, tetrahedral at
/// `r = 3`.
pub fn figurate(k: u64, r: u64) -> BigInt {
    binom((k + r) as i64 - 1, r as i64)
}

/// Non-decreasing sequences of length `s` over `{1..t}`: `C(t+s−1, s)`.
pub fn count_nondecreasing(t: u64, s: u64) -> BigInt {
    binom((t + s) as i64 - 1, s as i64)
}

fn check_cap(count: &BigInt) -> Result<()> {
    let c = count.to_u128().unwrap_or(u128::MAX);
    if c > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            count: c,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Lexicographic listing of the non-decreasing sequences of length `s`
/// over `{1..t}`.
pub fn enumerate_nondecreasing(t: usize, s: usize) -> Result<Vec<Vec<usize>>> {
    if t == 0 {
        return Err(Error::OutOfRange(
            "alphabet size t must be at least 1".into(),
        ));
    }
    check_cap(&count_nondecreasing(t as u64, s as u64))?;
    Ok(nondecreasing_tuples(s, t)
        .map(|v| v.into_iter().map(|x| x + 1).collect())
        .collect())
}

fn check_r(n: usize, r: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 2")));
    }
    if r < 1 || r >= n {
        return Err(Error::OutOfRange(format!(
            "r = {r} must lie in 1..={}",
            n - 1
        )));
    }
    Ok(())
}

fn class_coefficient(n: usize, r: usize, i: usize) -> BigInt {
    binom(2 * n as i64 - r as i64 - 1 - i as i64, (n - r) as i64 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

/// Both sides of the identity in closed form.
pub fn pascal_identity_check(n: usize, r: usize) -> Result<PascalCheck> {
    check_r(n, r)?;
    let lhs = binom(2 * n as i64, n as i64);
    let rhs: BigInt = (0..=n)
        .map(|i| class_coefficient(n, r, i) * figurate(i as u64 + 1, r as u64))
        .sum();
    Ok(PascalCheck {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// One block of the partition: sequences whose first `n − r` entries have
/// maximum `n + 1 − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCount {
    pub i: usize,
    pub predicted: BigInt,
    pub enumerated: u64,
}

impl ClassCount {
    pub fn matches(&self) -> bool {
        self.predicted == BigInt::from(self.enumerated)
    }
}

/// Enumerates all non-decreasing length-`n` sequences over `{1..n+1}` and
/// counts each class, splitting the work by the first entry.
pub fn pascal_identity_classes(n: usize, r: usize, exec: Execution) -> Result<Vec<ClassCount>> {
    check_r(n, r)?;
    check_cap(&binom(2 * n as i64, n as i64))?;
    let key = n - r - 1;
    let per_first = map_range(exec, 1..(n as u128 + 2), |first| {
        let first = first as usize;
        let mut hist = vec![0u64; n + 1];
        // remaining n−1 entries range over {first..n+1}
        for rest in nondecreasing_tuples(n - 1, n + 2 - first) {
            let v = if key == 0 {
                first
            } else {
                rest[key - 1] + first
            };
            hist[n + 1 - v] += 1;
        }
        hist
    });
    let mut totals = vec![0u64; n + 1];
    for hist in per_first {
        for (t, h) in totals.iter_mut().zip(hist) {
            *t += h;
        }
    }
    Ok(totals
        .into_iter()
        .enumerate()
        .map(|(i, enumerated)| ClassCount {
            i,
            predicted: class_coefficient(n, r, i) * figurate(i as u64 + 1, r as u64),
            enumerated,
        })
        .collect())
}

/// Sum of `C(k, j)` over `0 ≤ k ≤ 2n−2`, `max(0, k−n+1) ≤ j ≤ min(k, n−1)`.
pub fn rhombus_sum(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 2")));
    }
    let mut total = BigInt::from(0);
    for k in 0..=2 * n - 2 {
        for j in k.saturating_sub(n - 1)..=k.min(n - 1) {
            total += binom(k as i64, j as i64);
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    pub i: usize,
    pub coefficient: BigInt,
    /// Index `k` of the figurate term `P^(r)_k`.
    pub term_index: usize,
    pub term: BigInt,
    pub product: BigInt,
}

/// `C(2n, n)` written as a combination of `P^(r)_1, ..., P^(r)_{n+1}`.
pub fn decomposition_table(n: usize, r: usize) -> Result<Vec<DecompositionRow>> {
    check_r(n, r)?;
    Ok((0..=n)
        .map(|i| {
            let coefficient = class_coefficient(n, r, i);
            let term = figurate(i as u64 + 1, r as u64);
            DecompositionRow {
                i,
                product: &coefficient * &term,
                coefficient,
                term_index: i + 1,
                term,
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    CentralBinomial,
    CentralBinomialMinusOne,
}

impl SequenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SequenceKind::CentralBinomial => "central_binomial",
            SequenceKind::CentralBinomialMinusOne => "central_binomial_minus_one",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "central_binomial" => Ok(SequenceKind::CentralBinomial),
            "central_binomial_minus_one" => Ok(SequenceKind::CentralBinomialMinusOne),
            _ => Err(Error::OutOfRange(format!(
                "unknown sequence '{s}' (expected central_binomial or central_binomial_minus_one)"
            ))),
        }
    }
}

/// First `count` terms `C(2n−2, n−1)` (optionally minus one) from `n = 2`.
pub fn sequences(kind: SequenceKind, count: usize) -> Vec<BigInt> {
    (2..count + 2)
        .map(|n| {
            let c = binom(2 * n as i64 - 2, n as i64 - 1);
            match kind {
                SequenceKind::CentralBinomial => c,
                SequenceKind::CentralBinomialMinusOne => c - BigInt::one(),
            }
        })
        .collect()
}

/// Closed-form checks for `2 ≤ n ≤ max_n` and enumeration checks for
/// `2 ≤ n ≤ oracle_max_n`, over every valid `r`.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub closed_form: Vec<(usize, usize, PascalCheck)>,
    pub classes: Vec<(usize, usize, Vec<ClassCount>)>,
}

impl SweepReport {
    pub fn all_ok(&self) -> bool {
        self.closed_form.iter().all(|(_, _, c)| c.equal)
            && self
                .classes
                .iter()
                .all(|(_, _, cs)| cs.iter().all(ClassCount::matches))
    }
}

pub fn identity_sweep(max_n: usize, oracle_max_n: usize, exec: Execution) -> Result<SweepReport> {
    let mut closed_form = Vec::new();
    for n in 2..=max_n {
        for r in 1..n {
            closed_form.push((n, r, pascal_identity_check(n, r)?));
        }
    }
    let mut classes = Vec::new();
    for n in 2..=oracle_max_n {
        for r in 1..n {
            classes.push((n, r, pascal_identity_classes(n, r, exec)?));
        }
    }
    Ok(SweepReport {
        closed_form,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn figurate_examples() {
        assert_eq!(figurate(4, 2), 10.into());
        assert_eq!(figurate(6, 3), 56.into());
        assert_eq!(figurate(6, 4), 126.into());
        for r in 1..8 {
            assert_eq!(figurate(1, r), 1.into());
        }
    }

    #[test]
    fn nondecreasing_examples() {
        assert_eq!(count_nondecreasing(2, 3), 4.into());
        assert_eq!(count_nondecreasing(4, 3), 20.into());
        assert_eq!(count_nondecreasing(7, 0), 1.into());
        assert_eq!(
            enumerate_nondecreasing(2, 2).unwrap(),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(
            enumerate_nondecreasing(3, 1).unwrap(),
            vec![vec![1], vec![2], vec![3]]
        );
        assert_eq!(enumerate_nondecreasing(4, 3).unwrap().len(), 20);
        assert!(matches!(
            enumerate_nondecreasing(30, 10),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn pascal_examples() {
        for (n, r, total) in [(3, 2, 20), (4, 3, 70), (5, 4, 252), (2, 1, 6)] {
            let c = pascal_identity_check(n, r).unwrap();
            assert!(c.equal);
            assert_eq!(c.lhs, BigInt::from(total));
        }
        assert!(pascal_identity_check(3, 3).is_err());
        assert!(pascal_identity_check(3, 0).is_err());
    }

    #[test]
    fn class_examples() {
        let cs = pascal_identity_classes(3, 2, Execution::default()).unwrap();
        assert_eq!(cs[3].predicted, 10.into());
        assert_eq!(cs[3].enumerated, 10);
        assert_eq!(cs.iter().map(|c| c.enumerated).sum::<u64>(), 20);
        let cs = pascal_identity_classes(2, 1, Execution::Sequential).unwrap();
        assert_eq!(cs.iter().map(|c| c.enumerated).sum::<u64>(), 6);
        assert!(cs.iter().all(ClassCount::matches));
    }

    #[test]
    fn rhombus_examples() {
        let got: Vec<_> = (2..=5).map(|n| rhombus_sum(n).unwrap()).collect();
        assert_eq!(ints(&got), [5, 19, 69, 251]);
    }

    #[test]
    fn decomposition_examples() {
        let coeffs = |n, r| {
            decomposition_table(n, r)
                .unwrap()
                .iter()
                .map(|row| row.coefficient.to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(coeffs(4, 2), [5, 4, 3, 2, 1]);
        assert_eq!(coeffs(5, 2), [21, 15, 10, 6, 3, 1]);
        assert_eq!(coeffs(5, 3), [6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(
            ints(&sequences(SequenceKind::CentralBinomial, 5)),
            [2, 6, 20, 70, 252]
        );
        assert_eq!(
            ints(&sequences(SequenceKind::CentralBinomialMinusOne, 5)),
            [1, 5, 19, 69, 251]
        );
        assert_eq!(ints(&sequences(SequenceKind::CentralBinomial, 1)), [2]);
    }
}
