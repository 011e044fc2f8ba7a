use cskit_crystal::CrystalError;
use cskit_tableaux::{Interval, TableauError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("interval {interval} must have odd length at least 3 inside [1,{n}]")]
    BadInterval { interval: Interval, n: usize },
    #[error("{interval} is not a Dyck pattern interval of {word:?}")]
    NotDyck { interval: Interval, word: Vec<usize> },
    #[error("tableau is not standard")]
    NotStandard,
    #[error("interval {interval} is not placed across two consecutive blocks of {composition}")]
    Placement { composition: String, interval: Interval },
    #[error("conflicting edges out of {tableau} labelled {interval}")]
    Conflict { tableau: String, interval: Interval },
    #[error("vertex {0} is not a standard tableau of the shape or is repeated")]
    BadVertex(String),
    #[error("edge endpoint {0} out of range")]
    BadEndpoint(usize),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}
