//! Partitions, skew shapes, and the `(N, L)` predicates.
//!
//! A [`Partition`] stores only its nonzero parts. Reading a part past the
//! stored length yields 0, so `λ_N` is well defined for every `N`.
//!
//! All listings produced here use graded-lexicographic order: first by size,
//! then lexicographically *descending* on the parts, so `(2)` precedes
//! `(1,1)`. This is the [`Ord`] of [`Partition`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the nonzero parts are not weakly decreasing or a zero is
    /// followed by a positive part.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A single-row partition `(k)`; `k = 0` gives the empty partition.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, zero-indexed, with 0 beyond the stored length.
    /// In the usual 1-indexed notation, `λ_N` is `part(N - 1)`.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True if the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self ⊴ other`. Only meaningful for equal sizes.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.length().max(other.length()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Parts joined by hyphens, `""` for the empty partition.
    pub fn hyphenated(&self) -> String {
        join(&self.parts, "-")
    }
}

pub(crate) fn join(parts: &[usize], sep: &str) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "({})", join(&self.parts, ","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated parts such as `5,4`. The empty string, `()` and
/// `∅` all give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// The pair `(N, L)` of rank and level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylProfile {
    #[serde(rename = "N")]
    rank: usize,
    #[serde(rename = "L")]
    level: usize,
}

impl CylProfile {
    pub fn new(rank: usize, level: usize) -> Result<Self> {
        if rank == 0 || level == 0 {
            return Err(Error::InvalidProfile { rank, level });
        }
        Ok(CylProfile { rank, level })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `ℓ(λ) ≤ N` and `λ_1 − λ_N ≤ L`.
    pub fn is_nl_partition(&self, lam: &Partition) -> bool {
        lam.length() <= self.rank && lam.part(0) - lam.part(self.rank - 1) <= self.level
    }

    /// `outer / inner` is a horizontal strip with `ℓ(outer) ≤ N` and
    /// `outer_1 − inner_N ≤ L`.
    pub fn is_nl_horizontal_strip(&self, outer: &Partition, inner: &Partition) -> bool {
        is_horizontal_strip(outer, inner)
            && outer.length() <= self.rank
            && outer.part(0) <= inner.part(self.rank - 1) + self.level
    }

    /// Both partitions of the shape are `(N, L)`-partitions.
    pub fn is_cylindric(&self, shape: &SkewShape) -> bool {
        self.is_nl_partition(shape.outer()) && self.is_nl_partition(shape.inner())
    }

    pub(crate) fn require_nl(&self, lam: &Partition) -> Result<()> {
        if self.is_nl_partition(lam) {
            Ok(())
        } else {
            Err(Error::NotCylindric {
                profile: *self,
                partition: lam.clone(),
            })
        }
    }

    pub(crate) fn require_cylindric(&self, shape: &SkewShape) -> Result<()> {
        self.require_nl(shape.outer())?;
        self.require_nl(shape.inner())
    }
}

impl fmt::Display for CylProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rank, self.level)
    }
}

/// Interlacing test `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ ⋯`.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if outer.length() > inner.length() + 1 {
        return false;
    }
    (0..outer.length()).all(|i| outer.part(i) >= inner.part(i) && inner.part(i) >= outer.part(i + 1))
        && inner.length() <= outer.length()
}

/// All partitions of `n` with at most `max_len` parts, each at most
/// `max_part`, in lexicographically descending order.
pub fn bounded_partitions(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_len: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        if max_len == 0 || cap * max_len < remaining {
            return;
        }
        for first in (1..=cap.min(remaining)).rev() {
            prefix.push(first);
            go(remaining - first, max_len - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` in graded-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    bounded_partitions(n, n, n)
}

/// All partitions of `n` with at most `max_len` parts.
pub fn partitions_with_length(n: usize, max_len: usize) -> Vec<Partition> {
    bounded_partitions(n, max_len, n)
}

/// All `(N, L)`-partitions of size `n`, graded-lex ordered.
pub fn enumerate_nl_partitions(p: CylProfile, n: usize) -> Vec<Partition> {
    partitions_with_length(n, p.rank())
        .into_iter()
        .filter(|lam| p.is_nl_partition(lam))
        .collect()
}

/// All `ρ` with `ρ / inner` an `(N, L)`-horizontal strip of size `k`.
///
/// Returns an empty list when `k > L`. The result is sorted and
/// duplicate-free.
pub fn horizontal_strip_extensions(p: CylProfile, inner: &Partition, k: usize) -> Vec<Partition> {
    if k > p.level() {
        return Vec::new();
    }
    let top = inner.part(p.rank() - 1) + p.level();
    strip_extensions(inner, k, p.rank(), Some(top))
}

/// Classical horizontal strips `ρ / inner` of size `k` with `ℓ(ρ) ≤ max_len`.
pub fn classical_strip_extensions(inner: &Partition, k: usize, max_len: usize) -> Vec<Partition> {
    strip_extensions(inner, k, max_len, None)
}

/// Row `i` of `ρ` ranges over `[inner_i, inner_{i-1}]`; the first row is
/// capped by `first_row_cap` when present.
fn strip_extensions(
    inner: &Partition,
    k: usize,
    max_len: usize,
    first_row_cap: Option<usize>,
) -> Vec<Partition> {
    if inner.length() > max_len {
        return Vec::new();
    }
    let rows = (inner.length() + 1).min(max_len);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);

    fn go(
        inner: &Partition,
        row: usize,
        rows: usize,
        remaining: usize,
        first_row_cap: Option<usize>,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if remaining == 0 {
                let parts: Vec<usize> = current.iter().copied().filter(|&x| x > 0).collect();
                out.push(Partition::from_parts_unchecked(parts));
            }
            return;
        }
        let lo = inner.part(row);
        let hi = if row == 0 {
            match first_row_cap {
                Some(cap) => cap.min(lo + remaining),
                None => lo + remaining,
            }
        } else {
            inner.part(row - 1).min(lo + remaining)
        };
        if hi < lo {
            return;
        }
        for value in (lo..=hi).rev() {
            current.push(value);
            go(inner, row + 1, rows, remaining - (value - lo), first_row_cap, current, out);
            current.pop();
        }
    }

    go(inner, 0, rows, k, first_row_cap, &mut current, &mut out);
    out
}
