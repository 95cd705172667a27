//! Exact partition counts bracketing the number of graphical partitions.
//!
//! The crate counts four families of integer partitions of `n`:
//!
//! - `f'(n)`: partitions whose successive ranks are all at most `-1`,
//! - `g(n)`: graphical partitions (degree sequences of simple graphs),
//! - `f(n)`: partitions whose Frobenius symbol satisfies `k + Σa ≤ Σb`,
//! - `p(n)`: all partitions,
//!
//! and for even `n` these satisfy `f'(n) ≤ g(n) ≤ f(n) ≤ p(n)`. Every count
//! is available through at least two independent routes (generating-function
//! coefficients and brute-force enumeration) so they can check each other.

pub mod cli;
mod error;
pub mod frobenius;
pub mod genfunc;
pub mod graphical;
pub mod oracle;
pub mod partitions;

pub use error::{Error, Result};
pub use frobenius::{FrobeniusSymbol, RankVector};
pub use graphical::{EgReport, RealizationWitness};
pub use partitions::Partition;

/// Unbounded natural number used for every count.
pub type Count = num_bigint::BigUint;
