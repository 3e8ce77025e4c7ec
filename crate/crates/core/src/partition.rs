//! Integer partitions and compositions.
//!
//! Partitions are stored with weakly decreasing positive parts. Every search
//! over partitions in this crate visits them in reverse-lexicographic order,
//! the order produced by [`partitions_of`]: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_weight, Error, Result};

/// An integer partition: positive parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Sorts the given sizes into a partition, dropping zeros.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(sizes: I) -> Self {
        let mut parts: Vec<usize> = sizes.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The partition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Self::from_sorted_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted_unchecked(parts)
    }

    /// Whether `self` dominates `other` (`other ⊴ self`).
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        check_weight(self.weight, other.weight)?;
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let mut mine = 0usize;
        let mut theirs = 0usize;
        for i in 0..self.len().max(other.len()) {
            mine += self.part(i);
            theirs += other.part(i);
            if theirs > mine {
                return false;
            }
        }
        true
    }

    /// `λ^! = ∏ m_i!` over the multiplicities `m_i` of each part value.
    pub fn multiplicity_factorial(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .fold(BigUint::one(), |acc, f| acc * f)
    }

    /// Partitions covered by `self` in dominance order, in reverse-lex order.
    ///
    /// `μ ⋖ λ` exactly when `μ` comes from `λ` by moving one cell from row `i`
    /// down to row `j > i`, where `j = i + 1` or `λ_i = λ_j + 2`.
    pub fn dominance_covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let len = self.len();
        for i in 0..len {
            for j in (i + 1)..=len {
                let (from, to) = (self.part(i), self.part(j));
                if !(j == i + 1 || from == to + 2) {
                    continue;
                }
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if j == len {
                    parts.push(1);
                } else {
                    parts[j] += 1;
                }
                let ok = parts.windows(2).all(|w| w[0] >= w[1]);
                if ok {
                    parts.retain(|&p| p > 0);
                    out.push(Self::from_sorted_unchecked(parts));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// Compact subscript form used in displays: `(3,3,2) -> "3^22"`, `(2,1,1) -> "21^2"`.
    ///
    /// Falls back to comma separation when some part has more than one digit.
    pub fn subscript(&self) -> String {
        if self.parts.iter().any(|&p| p >= 10) {
            return self
                .multiplicities()
                .into_iter()
                .map(|(v, m)| {
                    if m == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{{{m}}}")
                    }
                })
                .collect::<Vec<_>>()
                .join(",");
        }
        let mut s = String::new();
        for (v, m) in self.multiplicities() {
            s.push_str(&v.to_string());
            if m > 1 {
                if m >= 10 {
                    s.push_str(&format!("^{{{m}}}"));
                } else {
                    s.push_str(&format!("^{m}"));
                }
            }
        }
        s
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Ord for Partition {
    /// Lexicographic on parts within a weight; smaller weights first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut offset = s.len() - s.trim_start().len();
    for field in trimmed.split(',') {
        let token = field.trim();
        let value: usize = token.parse().map_err(|_| Error::Parse {
            offset: offset + (field.len() - field.trim_start().len()),
            message: format!("`{token}` is not a positive integer"),
        })?;
        if value == 0 {
            return Err(Error::Parse {
                offset,
                message: "parts must be positive".into(),
            });
        }
        parts.push(value);
        offset += field.len() + 1;
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, whitespace tolerated: `"3, 3, 2"`.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    pub fn to_partition(&self) -> Partition {
        sort_to_partition(self)
    }
}

/// Sorts a composition's parts into weakly decreasing order.
pub fn sort_to_partition(c: &Composition) -> Partition {
    Partition::from_unsorted(c.parts.iter().copied())
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

/// Every partition of `n` exactly once, starting from `(n)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_sorted_unchecked(current.clone());

        // Successor: strip trailing ones, decrement the last part > 1, and
        // refill greedily with parts no larger than the decremented value.
        let mut parts = current;
        let mut spare = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            spare += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            spare += 1;
            while spare > 0 {
                let take = spare.min(cap);
                parts.push(take);
                spare -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}
