use thiserror::Error;

/// Errors produced by parsing, validation and the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },

    #[error("line {line}: token {token:?} is not an integer")]
    NotAnInteger { line: usize, token: String },

    #[error("row {row}, column {col}: symbol {symbol} out of range 1..={order}")]
    SymbolOutOfRange {
        row: usize,
        col: usize,
        symbol: i64,
        order: usize,
    },

    #[error("row {row}: expected {expected} entries, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("{0}")]
    NotLatin(Violation),

    #[error("order {0} is outside the supported range 1..={max}", max = crate::MAX_ORDER)]
    UnsupportedOrder(usize),

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("mapping is not complete (defect {defect:?})")]
    NotComplete { defect: Vec<usize> },

    #[error("mapping is not quasicomplete (defect {defect:?})")]
    NotQuasicomplete { defect: Vec<usize> },

    #[error("symbol {symbol} out of range 1..={order}")]
    ParameterOutOfRange { symbol: usize, order: usize },

    #[error("{x1} is not a special preimage; expected one of {preimages:?}")]
    NotSpecialPreimage { x1: usize, preimages: (usize, usize) },

    #[error("diagonal is not a bijection")]
    DiagonalNotBijective,

    #[error("invalid partial transversal: {0}")]
    InvalidTransversal(String),

    #[error("partial transversal of length {length} is too short for order {order}")]
    TransversalTooShort { length: usize, order: usize },

    #[error("isotopy search supports orders up to {max}, got {order}", max = crate::isotopy::MAX_ISOTOPY_ORDER)]
    IsotopyOrderTooLarge { order: usize },

    #[error("reduced square enumeration supports orders 1..={max}, got {order}", max = crate::harness::MAX_SCAN_ORDER)]
    ScanOrderOutOfRange { order: usize },

    #[error("Brualdi counterexample: maximum partial transversal has length {length} in an order-{order} square")]
    BrualdiCounterexample { length: usize, order: usize },
}

/// First place where an array fails to be a Latin square, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `symbol` appears again at (`row`, `col`) after an earlier occurrence in the same row.
    RowDuplicate { row: usize, col: usize, symbol: usize },
    /// `symbol` appears again at (`row`, `col`) after an earlier occurrence in the same column.
    ColumnDuplicate { row: usize, col: usize, symbol: usize },
    /// `symbol` at (`row`, `col`) is outside 1..=n.
    OutOfRange { row: usize, col: usize, symbol: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Violation::RowDuplicate { row, col, symbol } => {
                write!(f, "row {row} repeats symbol {symbol} (column {col})")
            }
            Violation::ColumnDuplicate { row, col, symbol } => {
                write!(f, "column {col} repeats symbol {symbol} (row {row})")
            }
            Violation::OutOfRange { row, col, symbol } => {
                write!(f, "row {row}, column {col}: symbol {symbol} out of range")
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
