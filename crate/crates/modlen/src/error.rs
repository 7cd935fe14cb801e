use thiserror::Error;

/// Errors surfaced by the library. The CLI maps `InvalidSpec`/`InvalidStat`
/// to usage errors (exit 2) and the resource variants to exit 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {constraint}")]
    InvalidSpec {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("invalid statistic: modulus k must be >= 1")]
    InvalidStat,

    #[error("{what} too large: {detail}")]
    TooLarge { what: &'static str, detail: String },

    #[error("group order {order} exceeds budget {budget}")]
    BudgetExceeded { order: u128, budget: u128 },

    #[error("count overflow while {0}")]
    Overflow(&'static str),

    #[error("cannot merge distributions: {0}")]
    MergeMismatch(String),

    #[error("csv parse error at line {line}: {msg}")]
    CsvParse { line: usize, msg: String },

    #[error("unknown golden table `{0}`")]
    UnknownTable(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
