use alloc::string::String;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("cannot parse partition {text:?}: {reason}")]
    ParsePartition { text: String, reason: &'static str },

    #[error("partition ({partition}) has more than {rows} parts")]
    TooManyParts { partition: Partition, rows: usize },

    #[error("partition ({partition}) does not fit in the {rows}x{cols} rectangle")]
    OutsideRectangle {
        partition: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("enumeration of size {size} exceeds the limit {limit}")]
    LimitExceeded { size: usize, limit: usize },

    #[error("{0}")]
    OrderViolation(&'static str),

    #[error("r < c violated: r = k-i = {r}, c = l-j = {c}")]
    RNotLessThanC { r: i64, c: i64 },

    #[error("stratum indices out of range: p = {p}, q = {q:?} (strata 1..={strata})")]
    IndexRange { p: i64, q: Option<i64>, strata: i64 },

    #[error("operands live in different rings ({0} vs {1})")]
    SpecMismatch(String, String),

    #[error("no small resolution available for stratum {p}")]
    SmallnessViolated { p: i64 },

    #[error("classification failure: {0}")]
    Classification(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
