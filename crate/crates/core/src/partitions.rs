//! Partitions, compositions and the sorting normalization that maps a
//! composition `mu` to `(lambda, sign)` with `lambda + delta` the descending
//! sort of `mu + delta`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("partition {0} has more than {1} nonzero parts")]
    TooLong(String, usize),
    #[error("cannot parse `{0}` as a comma-separated list of nonnegative integers")]
    Syntax(String),
}

fn parse_list(s: &str) -> Result<Vec<u32>, PartitionError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PartitionError::Syntax(s.to_string()));
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| PartitionError::Syntax(s.to_string()))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Weakly decreasing tuple of nonnegative integers. The ambient length
/// (trailing zeros included) is part of the value: `2,1` and `2,1,0` differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Ambient length `n`.
    pub fn ambient(&self) -> usize {
        self.parts.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based); zero past the ambient length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition, with ambient length equal to the largest part.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Same parts with ambient length `n`; fails if that would drop a
    /// nonzero part.
    pub fn with_ambient(&self, n: usize) -> Result<Partition, PartitionError> {
        if self.length() > n {
            return Err(PartitionError::TooLong(self.to_string(), n));
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }

    /// Componentwise order.
    pub fn leq(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.ambient() != other.ambient() {
            return Err(PartitionError::LengthMismatch(
                self.ambient(),
                other.ambient(),
            ));
        }
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b))
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s)?)
    }
}

/// Arbitrary tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.entries)
    }
}

impl FromStr for Composition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Composition::new(parse_list(s)?))
    }
}

/// `(n-1, n-2, ..., 1, 0)`.
pub fn staircase(n: usize) -> Composition {
    Composition::new((0..n as u32).rev().collect())
}

/// Result of sorting `mu + delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalization {
    Partition {
        partition: Partition,
        sign: i32,
    },
    /// `mu + delta` has a repeated entry.
    Degenerate,
}

/// Sorts `mu + delta` into strictly decreasing order. Returns the partition
/// `lambda` with `lambda + delta` equal to the sorted vector and the sign of
/// the sorting permutation (parity of the inversion count), or
/// [`Normalization::Degenerate`] when two shifted entries coincide.
pub fn normalize(mu: &Composition) -> Normalization {
    let n = mu.len();
    let shifted: Vec<u32> = mu
        .entries()
        .iter()
        .zip(staircase(n).entries())
        .map(|(m, d)| m + d)
        .collect();
    let mut inversions = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return Normalization::Degenerate,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    // strictly decreasing, so sorted[i] >= n - 1 - i
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(i, v)| v - (n - 1 - i) as u32)
        .collect();
    Normalization::Partition {
        partition: Partition { parts },
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
    }
}

/// Iterator over partitions inside a bound, optionally capped in weight, in
/// lexicographically descending order.
#[derive(Clone, Debug)]
pub struct Partitions {
    bound: Vec<u32>,
    max_weight: Option<u32>,
    current: Option<Vec<u32>>,
}

impl Partitions {
    fn start(bound: Vec<u32>, max_weight: Option<u32>) -> Self {
        let mut first = vec![0; bound.len()];
        let mut it = Partitions {
            bound,
            max_weight,
            current: None,
        };
        it.fill_from(&mut first, 0);
        it.current = Some(first);
        it
    }

    /// Sets `parts[from..]` to the lexicographically largest admissible tail.
    fn fill_from(&self, parts: &mut [u32], from: usize) {
        let mut room = self
            .max_weight
            .map(|w| w - parts[..from].iter().sum::<u32>());
        for k in from..parts.len() {
            let mut v = self.bound[k];
            if k > 0 {
                v = v.min(parts[k - 1]);
            }
            if let Some(r) = room.as_mut() {
                v = v.min(*r);
                *r -= v;
            }
            parts[k] = v;
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        if let Some(i) = current.iter().rposition(|&p| p > 0) {
            let mut next = current.clone();
            next[i] -= 1;
            self.fill_from(&mut next, i + 1);
            self.current = Some(next);
        }
        Some(Partition { parts: current })
    }
}

/// Every partition `lambda` with `lambda_i <= bound_i`. The bound must be
/// weakly decreasing.
pub fn enum_bounded(bound: &[u32]) -> Result<Partitions, PartitionError> {
    if bound.windows(2).any(|w| w[0] < w[1]) {
        return Err(PartitionError::NotDecreasing(bound.to_vec()));
    }
    Ok(Partitions::start(bound.to_vec(), None))
}

/// Every partition of ambient length `n` with weight at most `max_weight`.
pub fn enum_by_weight(n: usize, max_weight: u32) -> Partitions {
    Partitions::start(vec![max_weight; n], Some(max_weight))
}

/// Every composition in the box `prod [0, bound_i]`, odometer order.
pub fn compositions_in_box(bound: &[u32]) -> impl Iterator<Item = Composition> + '_ {
    let mut current = Some(vec![0u32; bound.len()]);
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if let Some(k) = (0..bound.len()).rev().find(|&k| next[k] < bound[k]) {
            next[k] += 1;
            next[k + 1..].iter_mut().for_each(|e| *e = 0);
            current = Some(next);
        }
        Some(Composition::new(out))
    })
}
