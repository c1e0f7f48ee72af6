//! Young diagrams.
//!
//! A [`Partition`] is stored canonically: weakly decreasing positive parts,
//! no trailing zeros. Anything that needs a fixed number of rows `d` takes
//! it as an argument and zero-pads through [`Partition::part`] or
//! [`Partition::padded`].
//!
//! The total order on partitions is the enumeration order used everywhere
//! output is produced: by size, then by parts in *descending* lexicographic
//! order. For the subdiagrams of `(3,2)` this gives
//! `0, 1, 2, 3, 1,1, 2,1, 3,1, 2,2, 3,2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not weakly decreasing: {0}")]
    NotDecreasing(String),
    #[error("invalid part {token:?} in {input:?}")]
    BadToken { token: String, input: String },
    #[error("empty partition string (write 0 for the empty diagram)")]
    EmptyInput,
    #[error("operation requires a nonempty diagram")]
    EmptyDiagram,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            let shown = parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            return Err(PartitionError::NotDecreasing(shown));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `n x d` rectangle `(n^d)`: `d` rows of `n` boxes.
    pub fn rectangle(n: u32, d: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition { parts: vec![n; d] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row.
    pub fn columns(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part lookup with zero padding.
    #[inline]
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The first `d` parts, zero-padded. Parts beyond `d` are ignored, so
    /// callers must ensure `d >= self.rows()` when that matters.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        (0..d).map(|i| self.part(i)).collect()
    }

    /// `other <= self` componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.parts.iter().zip(&self.parts).all(|(b, a)| b <= a)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.columns() as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition { parts: out }
    }

    /// All subdiagrams, each once, in the canonical order.
    pub fn subdiagrams(&self) -> impl Iterator<Item = Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.rows());
        collect_below(&self.parts, u32::MAX, &mut current, &mut out);
        out.sort();
        out.into_iter()
    }

    /// Every partition fitting in `columns` columns and `rows` rows, in the
    /// canonical order.
    pub fn in_rectangle(columns: u32, rows: usize) -> Vec<Partition> {
        Partition::rectangle(columns, rows).subdiagrams().collect()
    }

    /// `alpha^-`: removes the rightmost column, `alpha - (1^d)`.
    pub fn remove_column(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyDiagram);
        }
        Ok(Partition::new(self.parts.iter().map(|p| p - 1).collect())
            .expect("subtracting 1 keeps parts decreasing"))
    }

    /// `alpha'`: drops the bottom (first, longest) row.
    pub fn remove_bottom_row(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyDiagram);
        }
        Ok(Partition { parts: self.parts[1..].to_vec() })
    }

    /// Adds `1` to each of the first `d` parts (a column of height `d`).
    pub fn add_column(&self, d: usize) -> Partition {
        Partition::new(self.padded(d.max(self.rows())).iter().enumerate().map(|(i, &p)| if i < d { p + 1 } else { p }).collect())
            .expect("adding a left-justified column keeps parts decreasing")
    }
}

fn collect_below(bound: &[u32], prev: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: current.clone() });
    let i = current.len();
    if i == bound.len() {
        return;
    }
    let top = bound[i].min(prev);
    for v in 1..=top {
        current.push(v);
        collect_below(bound, v, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(PartitionError::EmptyInput);
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let t = token.trim();
            let v: u32 = t.parse().map_err(|_| PartitionError::BadToken {
                token: t.to_string(),
                input: s.to_string(),
            })?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literal partitions in tests and examples.
///
/// Panics on a non-decreasing input.
pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
}
