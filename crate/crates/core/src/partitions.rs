//! Integer partitions: the [`Partition`] type, exhaustive enumeration in
//! reverse-lexicographic order, conjugation, Durfee size and `p(n)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::{Count, Error, Result};

/// A nonincreasing sequence of positive integers.
///
/// Zero entries are dropped on construction: they carry no cells of the
/// Ferrers diagram and correspond to isolated vertices when the partition is
/// read as a degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

impl Partition {
    /// Normalizes raw input: sorts nonincreasing and removes zeros.
    pub fn from_raw(values: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(values.len());
        for (index, &value) in values.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
            let part = u32::try_from(value).map_err(|_| Error::PartTooLarge { index, value })?;
            if part > 0 {
                parts.push(part);
            }
        }
        Ok(Self::new(parts))
    }

    /// Builds a partition from unsigned entries in any order.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&d| d > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().map(|&d| u64::from(d)).sum();
        Self { parts, weight }
    }

    /// `parts` must already be nonincreasing and free of zeros.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&d| d > 0));
        let weight = parts.iter().map(|&d| u64::from(d)).sum();
        Self { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts (`ℓ`).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// The partition whose parts are the column lengths of this one's Ferrers
    /// diagram.
    pub fn conjugate(&self) -> Self {
        Self::from_sorted(conjugate_parts(&self.parts))
    }

    /// Side of the Durfee square: the largest `k` with `d_k ≥ k`.
    pub fn durfee_size(&self) -> usize {
        durfee_size(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn conjugate_parts(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut columns = vec![0u32; width];
    for &d in parts {
        for column in &mut columns[..d as usize] {
            *column += 1;
        }
    }
    columns
}

pub(crate) fn durfee_size(parts: &[u32]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d as usize > i)
        .count()
}

/// Every partition of `n`, first `(n)` and last `(1,…,1)`.
pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions::with_largest_at_most(n, n)
}

/// Streaming enumerator over partitions of a fixed weight in
/// reverse-lexicographic order.
///
/// [`Partitions::next_parts`] hands out a borrowed slice without allocating;
/// the [`Iterator`] impl clones it into an owned [`Partition`].
#[derive(Debug, Clone)]
pub struct Partitions {
    buf: Vec<u32>,
    // Positions below `frozen` never change.
    frozen: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Partitions {
    /// Partitions of `n` whose largest part is at most `max_part`.
    pub fn with_largest_at_most(n: u32, max_part: u32) -> Self {
        let mut buf = Vec::new();
        let state = if n > 0 && max_part == 0 {
            State::Done
        } else {
            fill_greedy(&mut buf, n, max_part);
            State::Fresh
        };
        Self {
            buf,
            frozen: 0,
            state,
        }
    }

    /// Partitions of `n` whose largest part is exactly `largest`.
    pub fn with_largest(n: u32, largest: u32) -> Self {
        if largest == 0 || largest > n {
            let state = if n == 0 && largest == 0 {
                State::Fresh
            } else {
                State::Done
            };
            return Self {
                buf: Vec::new(),
                frozen: 0,
                state,
            };
        }
        let mut buf = vec![largest];
        fill_greedy(&mut buf, n - largest, largest);
        Self {
            buf,
            frozen: 1,
            state: State::Fresh,
        }
    }

    /// Advances and returns the next partition as a slice of parts.
    pub fn next_parts(&mut self) -> Option<&[u32]> {
        match self.state {
            State::Fresh => self.state = State::Running,
            State::Running => {
                if !self.step() {
                    self.state = State::Done;
                    return None;
                }
            }
            State::Done => return None,
        }
        Some(&self.buf)
    }

    fn step(&mut self) -> bool {
        let Some(i) = self.buf.iter().rposition(|&d| d > 1) else {
            return false;
        };
        if i < self.frozen {
            return false;
        }
        let size = self.buf[i] - 1;
        let spill = (self.buf.len() - i) as u32;
        self.buf[i] = size;
        self.buf.truncate(i + 1);
        fill_greedy(&mut self.buf, spill, size);
        true
    }
}

fn fill_greedy(buf: &mut Vec<u32>, mut remaining: u32, size: u32) {
    while remaining > 0 {
        let part = size.min(remaining);
        buf.push(part);
        remaining -= part;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.next_parts()
            .map(|parts| Partition::from_sorted(parts.to_vec()))
    }
}

/// `p(0), …, p(max_n)` by Euler's pentagonal recurrence.
pub fn partition_numbers(max_n: u32) -> Vec<Count> {
    let len = max_n as usize + 1;
    let mut table: Vec<Count> = Vec::with_capacity(len);
    table.push(Count::one());
    for i in 1..len {
        let mut plus = Count::zero();
        let mut minus = Count::zero();
        for k in 1.. {
            let low = k * (3 * k - 1) / 2;
            if low > i {
                break;
            }
            let high = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[i - low];
            if high <= i {
                *acc += &table[i - high];
            }
        }
        table.push(plus - minus);
    }
    table
}

/// The number of partitions of `n`.
pub fn count_p(n: u32) -> Count {
    partition_numbers(n).pop().expect("table has n + 1 entries")
}
