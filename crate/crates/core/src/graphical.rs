//! Graphicality of degree sequences.
//!
//! A partition is graphical when it is the degree sequence of a simple
//! undirected graph. The Erdős–Gallai criterion decides this: the weight must
//! be even and for every `m`
//!
//! ```text
//! d_1 + … + d_m ≤ m(m-1) + Σ_{i>m} min(m, d_i)
//! ```
//!
//! [`erdos_gallai_report`] evaluates every inequality straight from the
//! definition. [`is_graphical`] uses prefix sums and stops at the first
//! violation; the two are kept separate so they can check each other.

use rayon::prelude::*;

use crate::partitions::Partitions;
use crate::{Count, Partition};

/// Per-index Erdős–Gallai slack together with the parity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgReport {
    /// Weight is even.
    pub parity_ok: bool,
    /// `slack[m-1] = m(m-1) + Σ_{i>m} min(m, d_i) - Σ_{i≤m} d_i` for `m = 1..=ℓ`.
    pub slack: Vec<i64>,
    pub graphical: bool,
}

impl EgReport {
    /// First index `m` (1-based) with negative slack, and that slack.
    pub fn first_violation(&self) -> Option<(usize, i64)> {
        self.slack
            .iter()
            .position(|&s| s < 0)
            .map(|i| (i + 1, self.slack[i]))
    }
}

pub fn erdos_gallai_report(p: &Partition) -> EgReport {
    let d = p.parts();
    let slack: Vec<i64> = (1..=d.len())
        .map(|m| {
            let mi = m as i64;
            let head: i64 = d[..m].iter().map(|&x| i64::from(x)).sum();
            let tail: i64 = d[m..].iter().map(|&x| i64::from(x).min(mi)).sum();
            mi * (mi - 1) + tail - head
        })
        .collect();
    let parity_ok = p.weight().is_multiple_of(2);
    let graphical = parity_ok && slack.iter().all(|&s| s >= 0);
    EgReport {
        parity_ok,
        slack,
        graphical,
    }
}

pub fn is_graphical(p: &Partition) -> bool {
    graphical_parts(p.parts(), &mut Vec::new())
}

/// Erdős–Gallai on a nonincreasing slice, reusing `prefix` as scratch.
fn graphical_parts(d: &[u32], prefix: &mut Vec<u64>) -> bool {
    prefix.clear();
    prefix.push(0);
    let mut total = 0u64;
    for &x in d {
        total += u64::from(x);
        prefix.push(total);
    }
    if !total.is_multiple_of(2) {
        return false;
    }
    let len = d.len();
    // `reach` = #{i : d_i ≥ m}, nonincreasing in m.
    let mut reach = len;
    for m in 1..=len {
        while reach > 0 && (d[reach - 1] as usize) < m {
            reach -= 1;
        }
        let m64 = m as u64;
        // Indices i > m split into those with d_i ≥ m (contributing m each)
        // and the rest (contributing d_i).
        let boundary = reach.max(m);
        let capped = (reach.saturating_sub(m)) as u64 * m64;
        let rest = total - prefix[boundary];
        if prefix[m] > m64 * (m64 - 1) + capped + rest {
            return false;
        }
    }
    true
}

/// Number of graphical partitions of `n`.
///
/// Tests every partition of `n`, split by largest part across threads.
pub fn count_g(n: u32) -> Count {
    if n % 2 == 1 {
        return Count::default();
    }
    let count: u64 = (0..=n)
        .into_par_iter()
        .map(|largest| {
            let mut scratch = Vec::new();
            let mut it = Partitions::with_largest(n, largest);
            let mut hits = 0u64;
            while let Some(parts) = it.next_parts() {
                if graphical_parts(parts, &mut scratch) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    Count::from(count)
}

/// A simple graph on vertices `1..=vertices`, listed edge by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationWitness {
    pub vertices: usize,
    /// Each edge is stored as `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl RealizationWitness {
    /// Degree of each vertex, indexed from vertex 1.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertices];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// No loops, no repeated edges, all endpoints in range.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u >= 1 && v <= self.vertices && u < v && seen.insert((u, v)))
    }
}

/// Havel–Hakimi realization.
///
/// Vertex `i` carries degree `d_i`. Each round connects the vertex of highest
/// residual degree to the next-highest ones; ties go to the lower vertex
/// index. Returns `None` when the sequence is not graphical.
pub fn havel_hakimi_witness(p: &Partition) -> Option<RealizationWitness> {
    let vertices = p.len();
    let mut residual: Vec<(u32, usize)> = p.parts().iter().copied().zip(1..).collect();
    let mut edges = Vec::with_capacity((p.weight() / 2) as usize);
    loop {
        residual.retain(|&(deg, _)| deg > 0);
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let Some(&(deg, hub)) = residual.first() else {
            break;
        };
        let deg = deg as usize;
        if deg >= residual.len() {
            return None;
        }
        for entry in &mut residual[1..=deg] {
            entry.0 -= 1;
            edges.push((hub.min(entry.1), hub.max(entry.1)));
        }
        residual[0].0 = 0;
    }
    Some(RealizationWitness { vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn report_examples() {
        let r = erdos_gallai_report(&part(&[3, 2, 1]));
        assert!(r.parity_ok);
        assert_eq!(r.slack[0], -1);
        assert!(!r.graphical);
        assert_eq!(r.first_violation(), Some((1, -1)));

        let r = erdos_gallai_report(&part(&[2, 2, 2]));
        assert_eq!(r.slack, vec![0, 0, 0]);
        assert!(r.graphical);

        let r = erdos_gallai_report(&part(&[3, 2]));
        assert!(!r.parity_ok);
        assert!(!r.graphical);
    }

    #[test]
    fn report_covers_every_index() {
        let p = part(&[4, 2, 2, 2, 2]);
        let r = erdos_gallai_report(&p);
        assert_eq!(r.slack.len(), p.len());
        assert!(r.graphical);
        let empty = erdos_gallai_report(&Partition::empty());
        assert!(empty.graphical && empty.slack.is_empty());
    }

    #[test]
    fn is_graphical_examples() {
        assert!(is_graphical(&part(&[4, 2, 2, 2, 2])));
        assert!(!is_graphical(&part(&[6])));
        assert!(is_graphical(&Partition::empty()));
    }

    #[test]
    fn fast_check_matches_report() {
        for n in 0..=22 {
            for p in enumerate_partitions(n) {
                assert_eq!(is_graphical(&p), erdos_gallai_report(&p).graphical, "{p}");
            }
        }
    }

    #[test]
    fn count_g_examples() {
        assert_eq!(count_g(10), Count::from(17u32));
        assert_eq!(count_g(40), Count::from(14048u32));
        assert_eq!(count_g(3), Count::default());
        assert_eq!(count_g(0), Count::from(1u32));
    }

    #[test]
    fn witness_examples() {
        let w = havel_hakimi_witness(&part(&[2, 2, 2])).unwrap();
        assert_eq!(w.edges, vec![(1, 2), (1, 3), (2, 3)]);
        assert!(havel_hakimi_witness(&part(&[3, 2, 1])).is_none());
        let w = havel_hakimi_witness(&part(&[1, 1])).unwrap();
        assert_eq!(w.edges, vec![(1, 2)]);
        assert!(havel_hakimi_witness(&part(&[6])).is_none());
        assert!(havel_hakimi_witness(&part(&[1, 1, 1])).is_none());
        let empty = havel_hakimi_witness(&Partition::empty()).unwrap();
        assert!(empty.edges.is_empty());
    }

    #[test]
    fn witness_realizes_paper_example() {
        let p = part(&[4, 2, 2, 2, 2]);
        let w = havel_hakimi_witness(&p).unwrap();
        assert!(w.is_simple());
        assert_eq!(w.degrees(), p.parts());
        assert_eq!(w.edges.len(), 6);
    }

    #[test]
    fn structural_checks_catch_bad_graphs() {
        let loopy = RealizationWitness {
            vertices: 2,
            edges: vec![(1, 1)],
        };
        assert!(!loopy.is_simple());
        let doubled = RealizationWitness {
            vertices: 2,
            edges: vec![(1, 2), (1, 2)],
        };
        assert!(!doubled.is_simple());
        let outside = RealizationWitness {
            vertices: 2,
            edges: vec![(1, 3)],
        };
        assert!(!outside.is_simple());
    }
}
