//! Frobenius symbols, successive ranks and Dyson rank.
//!
//! A partition with Durfee size `k` is encoded by two rows of length `k`:
//! the arm lengths `a_m = d_m - m` and the leg lengths `b_m = d'_m - m`,
//! where `d'` is the conjugate partition. Both rows are strictly decreasing
//! and `k + Σa + Σb` recovers the weight.

use std::fmt;

use crate::partitions::{conjugate_parts, durfee_size};
use crate::{Error, Partition, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FrobeniusSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl FrobeniusSymbol {
    /// Validates that both rows have equal length and strictly decrease.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::UnequalRows {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        if !strictly_decreasing(&top) {
            return Err(Error::NotStrictlyDecreasing { row: "top" });
        }
        if !strictly_decreasing(&bottom) {
            return Err(Error::NotStrictlyDecreasing { row: "bottom" });
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns, `k`.
    pub fn columns(&self) -> usize {
        self.top.len()
    }

    pub fn weight(&self) -> u64 {
        self.columns() as u64 + self.top_sum() + self.bottom_sum()
    }

    pub fn top_sum(&self) -> u64 {
        self.top.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn bottom_sum(&self) -> u64 {
        self.bottom.iter().map(|&b| u64::from(b)).sum()
    }

    /// `k + Σ top ≤ Σ bottom`, the condition counted by `f(n)`.
    pub fn column_condition(&self) -> bool {
        self.columns() as u64 + self.top_sum() <= self.bottom_sum()
    }

    /// The symbol of the conjugate partition.
    pub fn transpose(&self) -> Self {
        Self {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", Tuple(&self.top), Tuple(&self.bottom))
    }
}

struct Tuple<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for Tuple<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn strictly_decreasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] > w[1])
}

/// Successive ranks `a_m - b_m`, one per Frobenius column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RankVector(Vec<i64>);

impl RankVector {
    pub fn ranks(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every rank lies in `lo..=hi`. Vacuously true with no columns.
    pub fn all_within(&self, lo: i64, hi: i64) -> bool {
        self.0.iter().all(|r| (lo..=hi).contains(r))
    }

    pub fn all_at_most(&self, bound: i64) -> bool {
        self.0.iter().all(|&r| r <= bound)
    }
}

impl fmt::Display for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Tuple(&self.0).fmt(f)
    }
}

/// Reads arms off the rows and legs off the conjugate.
pub fn to_frobenius(p: &Partition) -> FrobeniusSymbol {
    let parts = p.parts();
    let k = durfee_size(parts);
    let columns = conjugate_parts(parts);
    let top = (0..k).map(|i| parts[i] - (i as u32 + 1)).collect();
    let bottom = (0..k).map(|i| columns[i] - (i as u32 + 1)).collect();
    FrobeniusSymbol { top, bottom }
}

/// The recursive leg formula
///
/// `b_m = m(m-1)/2 + Σ_{i>m} min(m, d_i) - Σ_{i<m} b_i`
///
/// evaluated against caller-supplied `b_1, …, b_{m-1}`.
pub fn paper_b(p: &Partition, m: usize, previous_b: &[u32]) -> Result<u32> {
    let parts = p.parts();
    let k = durfee_size(parts);
    if m == 0 || m > k {
        return Err(Error::ColumnOutOfRange { m, columns: k });
    }
    if previous_b.len() != m - 1 {
        return Err(Error::PreviousRowLength {
            expected: m - 1,
            got: previous_b.len(),
        });
    }
    let m64 = m as i64;
    let tail: i64 = parts[m..].iter().map(|&d| i64::from(d).min(m64)).sum();
    let earlier: i64 = previous_b.iter().map(|&b| i64::from(b)).sum();
    let value = m64 * (m64 - 1) / 2 + tail - earlier;
    u32::try_from(value).map_err(|_| Error::InconsistentPreviousRow { m })
}

/// The whole bottom row built by iterating [`paper_b`].
pub fn paper_bottom_row(p: &Partition) -> Vec<u32> {
    let k = p.durfee_size();
    let mut row = Vec::with_capacity(k);
    for m in 1..=k {
        let b = paper_b(p, m, &row).expect("row built by the same recursion");
        row.push(b);
    }
    row
}

/// Inverse of [`to_frobenius`].
pub fn from_frobenius(s: &FrobeniusSymbol) -> Partition {
    let k = s.columns();
    let mut parts: Vec<u32> = s.top.iter().zip(1..).map(|(&a, m)| a + m).collect();
    // Below the Durfee square, row i has one cell for each of the first k
    // columns that reaches down to it.
    let legs: Vec<u32> = s.bottom.iter().zip(1..).map(|(&b, m)| b + m).collect();
    let depth = legs.first().copied().unwrap_or(0);
    for row in (k as u32 + 1)..=depth {
        parts.push(legs.iter().filter(|&&len| len >= row).count() as u32);
    }
    Partition::from_sorted(parts)
}

pub fn successive_ranks(s: &FrobeniusSymbol) -> RankVector {
    RankVector(
        s.top
            .iter()
            .zip(&s.bottom)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect(),
    )
}

/// Largest part minus number of parts.
pub fn dyson_rank(p: &Partition) -> Result<i64> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    Ok(i64::from(largest) - p.len() as i64)
}
