use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("alphabet size {n} is smaller than the number of rows {rows}")]
    AlphabetTooSmall { n: usize, rows: usize },
    #[error("f_{i} is not defined on this element")]
    Undefined { i: usize },
    #[error("operator index must be at least 1")]
    ZeroIndex,
}
