//! Canonical integer partitions and the integer-sequence arithmetic built on
//! top of them: first-row embeddings `lambda[n]`, first-part bumps, the
//! dagger resequencing used by the alternating recovery sum, and hook-length
//! dimension counts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Stored without trailing zeros, so equality and hashing are structural.
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from an already weakly decreasing sequence.
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |lambda|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// i-th part (0-indexed), with parts beyond the length taken as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams: true iff self_i <= outer_i for all i.
    pub fn contained_in(&self, outer: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= outer.part(i))
    }

    /// The partition with the first part removed.
    pub fn strip_first(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// The sequence `(n - |lambda|, lambda_1, lambda_2, ...)`. It is a
    /// partition of n exactly when n >= |lambda| + lambda_1; check with
    /// [`IntSequence::to_partition`].
    pub fn embed(&self, n: i64) -> IntSequence {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(n - i64::from(self.size()));
        entries.extend(self.parts.iter().map(|&p| i64::from(p)));
        IntSequence { entries }
    }

    /// Adds `delta` (+1 or -1) to the first part, treating the empty
    /// partition's first part as 0 for delta = +1. The result may fail to be
    /// a partition; check with [`IntSequence::to_partition`].
    pub fn bump_first(&self, delta: i32) -> Result<IntSequence> {
        debug_assert!(delta == 1 || delta == -1);
        if self.is_empty() && delta < 0 {
            return Err(Error::EmptyBump);
        }
        let mut entries: Vec<i64> = self.parts.iter().map(|&p| i64::from(p)).collect();
        if entries.is_empty() {
            entries.push(0);
        }
        entries[0] += i64::from(delta);
        Ok(IntSequence { entries })
    }

    /// The resequencing `nu†i = (nu_i - i + 1, nu_1 + 1, ..., nu_{i-1} + 1,
    /// nu_{i+1}, ...)`, with parts beyond the length taken as 0. `nu†1 = nu`.
    /// The entry sum is preserved for every i.
    pub fn dagger(&self, i: usize) -> IntSequence {
        assert!(i >= 1, "dagger index must be at least 1");
        let mut entries = Vec::with_capacity(self.len().max(i));
        entries.push(i64::from(self.part(i - 1)) - (i as i64) + 1);
        for j in 0..i - 1 {
            entries.push(i64::from(self.part(j)) + 1);
        }
        for j in i..self.len() {
            entries.push(i64::from(self.parts[j]));
        }
        IntSequence { entries }
    }

    /// Conjugate shape, used internally for hook lengths.
    fn conjugate_parts(&self) -> Vec<u32> {
        let mut cols = vec![0u32; self.first() as usize];
        for &p in &self.parts {
            for col in cols.iter_mut().take(p as usize) {
                *col += 1;
            }
        }
        cols
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula. Equals the dimension of the irreducible representation.
    pub fn syt_count(&self) -> Result<i64> {
        let n = self.size();
        let cols = self.conjugate_parts();
        let mut numerator: u128 = 1;
        for k in 1..=u128::from(n) {
            numerator = numerator.checked_mul(k).ok_or(Error::Overflow)?;
        }
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in cols.iter().enumerate().take(row as usize) {
                let arm = row as u128 - j as u128 - 1;
                let leg = u128::from(col) - i as u128 - 1;
                hooks = hooks.checked_mul(arm + leg + 1).ok_or(Error::Overflow)?;
            }
        }
        let count = numerator / hooks;
        debug_assert_eq!(count * hooks, numerator);
        i64::try_from(count).map_err(|_| Error::Overflow)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `2,1,1`. The empty partition is written
    /// as the empty string or `-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::NotAPartition(s.to_string()))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts).map_err(|_| Error::NotAPartition(s.to_string()))
    }
}

impl From<&Partition> for IntSequence {
    fn from(p: &Partition) -> Self {
        IntSequence {
            entries: p.parts.iter().map(|&x| i64::from(x)).collect(),
        }
    }
}

/// An arbitrary finite integer sequence. Entries may be negative, zero, or
/// out of order; the length is significant (for straightening, `(0,2,1)` and
/// `(2,1)` are different sequences).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntSequence {
    entries: Vec<i64>,
}

impl IntSequence {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        IntSequence {
            entries: entries.into(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Reads the sequence as a partition if it is weakly decreasing and
    /// nonnegative (trailing zeros are normalized away).
    pub fn to_partition(&self) -> Option<Partition> {
        if self.entries.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        if self.entries.iter().any(|&e| e < 0) {
            return None;
        }
        let parts: Vec<u32> = self
            .entries
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| e as u32)
            .collect();
        Some(Partition { parts })
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(IntSequence::default());
        }
        let entries: Vec<i64> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::NotAPartition(s.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(IntSequence { entries })
    }
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::NotAPartition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

/// All partitions of n, in descending lexicographic order:
/// (n), (n-1,1), ..., (1,1,...,1).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill_partitions(n, n, &mut stack, &mut out);
    out
}

fn fill_partitions(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 1 {
        stack.push(p);
        fill_partitions(remaining - p, p, stack, out);
        stack.pop();
        p -= 1;
    }
}

/// All partitions containing `base` with exactly `extra` additional boxes.
pub fn partitions_containing(base: &Partition, extra: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    grow_rows(base, 0, extra, u32::MAX, &mut parts, &mut out);
    out
}

fn grow_rows(
    base: &Partition,
    row: usize,
    remaining: u32,
    prev: u32,
    parts: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row >= base.len() && remaining == 0 {
        out.push(Partition {
            parts: parts.clone(),
        });
        return;
    }
    let floor = base.part(row);
    if row >= base.len() {
        // New rows must stay positive, so stop once nothing is left to add.
        for value in 1..=prev.min(remaining) {
            parts.push(value);
            grow_rows(base, row + 1, remaining - value, value, parts, out);
            parts.pop();
        }
    } else {
        for value in floor..=prev.min(floor + remaining) {
            parts.push(value);
            grow_rows(
                base,
                row + 1,
                remaining - (value - floor),
                value,
                parts,
                out,
            );
            parts.pop();
        }
    }
}
