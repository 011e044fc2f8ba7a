use cskit_tableaux::{Interval, TableauError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoRowError {
    #[error("step {0:?} is not 'u' or 'd'")]
    BadStep(char),
    #[error("path rises above height 0 after step {0}")]
    AboveZero(usize),
    #[error("shape has more than two rows")]
    NotTwoRow,
    #[error("tableau is not standard")]
    NotStandard,
    #[error("({0},{1}) is not a partition")]
    BadShape(usize, usize),
    #[error("no type {ty} edge labelled {interval} out of {path}")]
    NoEdge { path: String, interval: Interval, ty: &'static str },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}
