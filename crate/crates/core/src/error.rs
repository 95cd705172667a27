use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {value} at position {index}")]
    NegativePart { index: usize, value: i64 },

    #[error("part {value} at position {index} exceeds {max}", max = u32::MAX)]
    PartTooLarge { index: usize, value: i64 },

    #[error("column index {m} outside 1..={columns}")]
    ColumnOutOfRange { m: usize, columns: usize },

    #[error("expected {expected} previous bottom-row entries, got {got}")]
    PreviousRowLength { expected: usize, got: usize },

    #[error("previous bottom-row entries are inconsistent with the partition at column {m}")]
    InconsistentPreviousRow { m: usize },

    #[error("frobenius rows have unequal lengths {top} and {bottom}")]
    UnequalRows { top: usize, bottom: usize },

    #[error("frobenius {row} row is not strictly decreasing")]
    NotStrictlyDecreasing { row: &'static str },

    #[error("the empty partition has no largest part")]
    EmptyPartition,

    #[error("n = {n} is above the brute-force ceiling {ceiling}")]
    AboveCeiling { n: u32, ceiling: u32 },
}
