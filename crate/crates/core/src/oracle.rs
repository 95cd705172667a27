//! Brute-force counters used as ground truth.
//!
//! These deliberately avoid the code paths they check: partitions come from
//! a separate recursive generator, the bottom Frobenius row comes from the
//! recursive leg formula ([`paper_bottom_row`]) instead of the conjugate, and
//! graphicality goes through the full [`erdos_gallai_report`].

use crate::frobenius::paper_bottom_row;
use crate::graphical::erdos_gallai_report;
use crate::{Count, Error, Partition, Result};

pub const DEFAULT_CEILING: u32 = 50;

/// Exhaustive counters that refuse weights above `ceiling`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForce {
    ceiling: u32,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl BruteForce {
    pub fn with_ceiling(ceiling: u32) -> Self {
        Self { ceiling }
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    fn count_matching(&self, n: u32, mut keep: impl FnMut(&Partition) -> bool) -> Result<Count> {
        if n > self.ceiling {
            return Err(Error::AboveCeiling {
                n,
                ceiling: self.ceiling,
            });
        }
        let mut hits = 0u64;
        visit(n, n, &mut Vec::new(), &mut |parts| {
            if keep(&Partition::new(parts.to_vec())) {
                hits += 1;
            }
        });
        Ok(Count::from(hits))
    }

    /// Partitions with `k + Σ a_m ≤ Σ b_m`.
    pub fn count_f(&self, n: u32) -> Result<Count> {
        self.count_matching(n, |p| {
            let bottom = paper_bottom_row(p);
            let k = bottom.len();
            let top: u64 = arms(p).sum();
            k as u64 + top <= bottom.iter().map(|&b| u64::from(b)).sum::<u64>()
        })
    }

    /// Partitions whose successive ranks are all `≤ -1`.
    pub fn count_fprime(&self, n: u32) -> Result<Count> {
        self.count_matching(n, |p| {
            let bottom = paper_bottom_row(p);
            arms(p)
                .zip(bottom)
                .all(|(a, b)| a as i64 - i64::from(b) <= -1)
        })
    }

    /// Graphical partitions, via the full slack report.
    pub fn count_g(&self, n: u32) -> Result<Count> {
        self.count_matching(n, |p| erdos_gallai_report(p).graphical)
    }
}

// a_m = d_m - m for m up to the Durfee size.
fn arms(p: &Partition) -> impl Iterator<Item = u64> + '_ {
    p.parts()
        .iter()
        .zip(1u64..)
        .take_while(|&(&d, m)| u64::from(d) >= m)
        .map(|(&d, m)| u64::from(d) - m)
}

// Calls `f` on every partition of `remaining` (appended to `prefix`) with
// parts no larger than `cap`.
fn visit(remaining: u32, cap: u32, prefix: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        f(prefix);
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        prefix.push(part);
        visit(remaining - part, part, prefix, f);
        prefix.pop();
    }
}

pub fn count_f_bruteforce(n: u32) -> Result<Count> {
    BruteForce::default().count_f(n)
}

pub fn count_fprime_bruteforce(n: u32) -> Result<Count> {
    BruteForce::default().count_fprime(n)
}

pub fn count_g_bruteforce(n: u32) -> Result<Count> {
    BruteForce::default().count_g(n)
}
