//! Young tableaux in French notation and the classical algorithms on them.
//!
//! Rows are stored bottom row first. The reading word reads the rows from the
//! top row down, each row left to right.

mod composition;
mod enumerate;
mod error;
mod interval;
mod partition;
pub mod quasisym;
mod rsk;
mod tableau;
pub mod word;

pub use composition::Composition;
pub use enumerate::{enumerate_qyt, enumerate_ssyt, enumerate_syt, is_quasi_yamanouchi};
pub use error::TableauError;
pub use interval::Interval;
pub use partition::Partition;
pub use rsk::{insertion_tableau, knuth_equivalent, rsk};
pub use tableau::Tableau;
pub use word::Word;
