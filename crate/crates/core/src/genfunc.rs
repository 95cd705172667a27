//! Exact truncated generating-function coefficients.
//!
//! Nothing here uses floating point or symbolic series. Products are
//! expanded into dense coefficient arrays indexed by weight, truncated at an
//! explicit bound.
//!
//! - `f'(n)`: coefficient of `q^n` in `∏_{i≥2} 1/(1-q^i)`.
//! - `f(n)`: the `z^0` part of `∏_{i≥0} (1 + z q^{i+1})(1 + z^{-1} x^i)`,
//!   summed over all monomials `q^m x^r` with `m + r = n` and `m ≤ r`.
//!   Each `z` factor contributes one entry `a_i + 1` of the top row and each
//!   `z^{-1}` factor one entry `b_i` of the bottom row, so `z^0` means equal
//!   column counts.
//! - `A_{M,r}(n)` and `B_{M,r}(n)` from the Andrews–Bressoud theorem; `B` is
//!   computed by enumeration, never from an identity.

use num_traits::{One, Zero};

use crate::frobenius::{successive_ranks, to_frobenius};
use crate::partitions::enumerate_partitions;
use crate::Count;

/// Coefficients `c_0, …, c_{max_n}` of a truncated power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    values: Vec<Count>,
}

impl CoefficientTable {
    pub fn max_n(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn get(&self, n: u32) -> Option<&Count> {
        self.values.get(n as usize)
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Count> {
        self.values
    }
}

/// `∏_{j allowed} 1/(1-q^j)` truncated at `q^max_n`.
pub fn restricted_parts_series(
    max_n: u32,
    mut allowed: impl FnMut(u32) -> bool,
) -> CoefficientTable {
    let len = max_n as usize + 1;
    let mut values = vec![Count::zero(); len];
    values[0] = Count::one();
    for part in 1..=max_n {
        if !allowed(part) {
            continue;
        }
        let step = part as usize;
        for w in step..len {
            let (lower, upper) = values.split_at_mut(w);
            upper[0] += &lower[w - step];
        }
    }
    CoefficientTable { values }
}

/// Series for partitions with no part equal to 1.
pub fn fprime_series(max_n: u32) -> CoefficientTable {
    restricted_parts_series(max_n, |j| j >= 2)
}

pub fn count_fprime_gf(n: u32) -> Count {
    fprime_series(n).into_values().swap_remove(n as usize)
}

/// `counts[k][s]`: number of `k`-element sets of distinct integers `≥ min`
/// summing to `s`, for `s ≤ max_weight`.
fn distinct_set_counts(min: u32, max_weight: u32) -> Vec<Vec<Count>> {
    let width = max_weight as usize + 1;
    // k distinct values ≥ min sum to at least k*min + k(k-1)/2.
    let max_k = (0..)
        .take_while(|&k: &usize| {
            k * min as usize + k * k.saturating_sub(1) / 2 <= max_weight as usize
        })
        .last()
        .unwrap_or(0);
    let mut counts = vec![vec![Count::zero(); width]; max_k + 1];
    counts[0][0] = Count::one();
    for value in min..=max_weight {
        let v = value as usize;
        for k in (1..=max_k).rev() {
            let (lower, upper) = counts.split_at_mut(k);
            let prev = &lower[k - 1];
            let cur = &mut upper[0];
            for s in (v..width).rev() {
                if !prev[s - v].is_zero() {
                    cur[s] += &prev[s - v];
                }
            }
        }
    }
    counts
}

/// The two-variable product `∏_{i≥0} (1 + z q^{i+1})(1 + z^{-1} x^i)`,
/// restricted to its `z^0` part and truncated at total degree `max_weight`.
#[derive(Debug, Clone)]
pub struct BalancedProduct {
    max_weight: u32,
    // Sets of distinct positive integers (the `a_i + 1`), by size and sum.
    top: Vec<Vec<Count>>,
    // Sets of distinct nonnegative integers (the `b_i`), by size and sum.
    bottom: Vec<Vec<Count>>,
}

impl BalancedProduct {
    pub fn new(max_weight: u32) -> Self {
        Self {
            max_weight,
            top: distinct_set_counts(1, max_weight),
            bottom: distinct_set_counts(0, max_weight),
        }
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    /// Coefficient of `z^0 q^m x^r`. Zero beyond the truncation bound.
    pub fn coefficient(&self, q_degree: u32, x_degree: u32) -> Count {
        if q_degree.saturating_add(x_degree) > self.max_weight {
            return Count::zero();
        }
        let (m, r) = (q_degree as usize, x_degree as usize);
        self.top
            .iter()
            .zip(&self.bottom)
            .map(|(t, b)| &t[m] * &b[r])
            .sum()
    }

    /// `Σ_{m+r=n, m≤r}` of the `z^0 q^m x^r` coefficients.
    pub fn balanced_total(&self, n: u32) -> Count {
        (0..=n / 2).map(|m| self.coefficient(m, n - m)).sum()
    }

    /// `Σ_{m+r=n}` of the coefficients; setting `x = q` gives `p(n)`.
    pub fn diagonal_total(&self, n: u32) -> Count {
        (0..=n).map(|m| self.coefficient(m, n - m)).sum()
    }
}

pub fn count_f_gf(n: u32) -> Count {
    BalancedProduct::new(n).balanced_total(n)
}

/// `A_{M,r}(n)`: partitions of `n` with no part `≡ 0, r, -r (mod M)`.
///
/// # Panics
///
/// If `modulus` is zero.
pub fn count_residue_avoiding(modulus: u32, residue: u32, n: u32) -> Count {
    assert!(modulus >= 1, "modulus must be positive");
    let plus = residue % modulus;
    let minus = (modulus - plus) % modulus;
    restricted_parts_series(n, |j| {
        let class = j % modulus;
        class != 0 && class != plus && class != minus
    })
    .into_values()
    .swap_remove(n as usize)
}

/// `B_{M,r}(n)`: partitions of `n` whose successive ranks all lie in
/// `[2 - r, M - r - 2]`.
///
/// # Panics
///
/// If `modulus` is zero.
pub fn count_rank_bounded(modulus: u32, residue: u32, n: u32) -> Count {
    assert!(modulus >= 1, "modulus must be positive");
    let lo = 2 - i64::from(residue);
    let hi = i64::from(modulus) - i64::from(residue) - 2;
    let hits = enumerate_partitions(n)
        .filter(|p| successive_ranks(&to_frobenius(p)).all_within(lo, hi))
        .count();
    Count::from(hits)
}

/// Partitions of `n` whose successive ranks are all at most `-1`.
pub fn count_fprime_ranks(n: u32) -> Count {
    let hits = enumerate_partitions(n)
        .filter(|p| successive_ranks(&to_frobenius(p)).all_at_most(-1))
        .count();
    Count::from(hits)
}
