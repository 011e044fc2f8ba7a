use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("parts must be positive: {0:?}")]
    NotAComposition(Vec<usize>),
    #[error("blocks are not consecutive intervals covering [1,{n}]")]
    BadBlocks { n: usize },
    #[error("invalid interval [{lo},{hi}]")]
    BadInterval { lo: usize, hi: usize },
    #[error("rows do not form a valid (skew) shape")]
    BadShape,
    #[error("row {row} is not weakly increasing")]
    RowNotWeak { row: usize },
    #[error("column {col} is not strictly increasing at row {row}")]
    ColumnNotStrict { row: usize, col: usize },
    #[error("letters must be positive")]
    ZeroLetter,
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau is not of straight shape")]
    NotStraight,
    #[error("word length {got} does not match shape size {expected}")]
    WordLength { expected: usize, got: usize },
    #[error("letters of the word are not exactly the interval [{lo},{hi}]")]
    LettersNotInterval { lo: usize, hi: usize },
    #[error("letters of [{lo},{mid}] or of [{above},{hi}] do not appear in increasing order", above = mid + 1)]
    NotMonotone { lo: usize, mid: usize, hi: usize },
}
