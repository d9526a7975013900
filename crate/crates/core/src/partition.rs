//! Partitions, rectangles, and the partition-level maps used on Schur bases.
//!
//! A [`Partition`] never stores zero parts. Operations that need a fixed
//! number of rows pad with zeros internally.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is by weight first, then lexicographically *descending*, which
/// is the order [`enumerate_by_weight`] produces: `∅ < (1) < (2) < (1,1) < (3) ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(m)`, or `∅` for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self { parts: vec![1; m] }
    }

    /// The full rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Self {
                parts: vec![cols; rows],
            }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The largest part, or zero.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Parts padded with zeros to exactly `rows` entries.
    pub fn padded(&self, rows: usize) -> Result<Vec<usize>> {
        if self.len() > rows {
            return Err(Error::TooManyParts {
                partition: self.clone(),
                rows,
            });
        }
        let mut v = self.parts.clone();
        v.resize(rows, 0);
        Ok(v)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Self { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains_diagram(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts; the zero partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition {
                text: s.to_string(),
                reason: "parts must be nonnegative integers",
            })?;
        Partition::new(parts).map_err(|_| Error::ParsePartition {
            text: s.to_string(),
            reason: "parts must be weakly decreasing",
        })
    }
}

/// A `rows × cols` box. Degenerate rectangles hold only the zero partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub const fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.cols, self.rows)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        contains(*self, lambda)
    }

    /// Partitions of `weight` inside the rectangle, lexicographically descending.
    pub fn partitions_of_weight(&self, weight: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(self.rows);
        fill(self.rows, self.cols, weight, &mut stack, &mut out);
        out
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

fn fill(rows_left: usize, max_part: usize, remaining: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(stack.clone()));
        return;
    }
    if rows_left == 0 || rows_left * max_part < remaining {
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        stack.push(part);
        fill(rows_left - 1, part, remaining - part, stack, out);
        stack.pop();
    }
}

/// Cap on `rows·cols` for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimit(pub usize);

impl EnumLimit {
    pub const DEFAULT: EnumLimit = EnumLimit(64);

    pub fn check(&self, size: usize) -> Result<()> {
        if size > self.0 {
            Err(Error::LimitExceeded { size, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}

pub fn contains(rect: Rectangle, lambda: &Partition) -> bool {
    lambda.len() <= rect.rows && lambda.first() <= rect.cols
}

/// All partitions inside `rect`, bucketed by weight `0..=rows·cols`.
pub fn enumerate_by_weight(rect: Rectangle, limit: EnumLimit) -> Result<Vec<Vec<Partition>>> {
    limit.check(rect.area())?;
    Ok((0..=rect.area()).map(|w| rect.partitions_of_weight(w)).collect())
}

/// Pads `λ` to `rows` parts and adds `amount` to each.
pub fn add_to_parts(lambda: &Partition, rows: usize, amount: usize) -> Result<Partition> {
    let parts = lambda.padded(rows)?.into_iter().map(|p| p + amount).collect();
    Ok(Partition::from_sorted_unchecked(parts))
}

/// `(μ_1+shift, …, μ_{head_rows}+shift, λ_1, λ_2, …)`: the Schur-basis image
/// of the Gysin map through an intermediate stratum.
pub fn gysin_compose(mu: &Partition, lambda: &Partition, head_rows: usize, shift: usize) -> Result<Partition> {
    if head_rows > 0 && lambda.first() > shift {
        return Err(Error::NotAPartition(format!(
            "tail ({lambda}) exceeds the raised head (shift {shift})"
        )));
    }
    if head_rows == 0 && !mu.is_empty() {
        return Err(Error::TooManyParts {
            partition: mu.clone(),
            rows: 0,
        });
    }
    let mut parts = add_to_parts(mu, head_rows, shift)?.parts;
    parts.resize(head_rows, 0);
    parts.extend_from_slice(lambda.parts());
    Partition::new(parts)
}

/// The unique `q ∈ [l, p]` with `ν_1..ν_{p-q} ≥ c+1-q` and
/// `ν_{p-q+1}..ν_{p-l} ≤ c+1-q`, where `ν` is padded to `p-l` parts.
pub fn classify_stratum(nu: &Partition, p: i64, l: i64, c: i64) -> Result<i64> {
    if l > p || l < 1 {
        return Err(Error::Precondition(format!("need 1 <= l <= p, got l={l}, p={p}")));
    }
    let rows = (p - l) as usize;
    let padded = nu.padded(rows)?;
    let mut found = None;
    for q in l..=p {
        let threshold = c + 1 - q;
        let head = (p - q) as usize;
        let ok = padded[..head].iter().all(|&v| v as i64 >= threshold)
            && padded[head..].iter().all(|&v| v as i64 <= threshold);
        if ok {
            if let Some(prev) = found {
                return Err(Error::Classification(format!(
                    "({nu}) matches both q={prev} and q={q}"
                )));
            }
            found = Some(q);
        }
    }
    found.ok_or_else(|| Error::Classification(format!("({nu}) matches no stratum in [{l}, {p}]")))
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}
