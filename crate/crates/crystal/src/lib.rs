//! Type A crystals on words and semistandard tableaux.

mod bracket;
mod cycle;
mod error;
mod graph;
mod lusztig;
mod ops;
mod stembridge;

pub use bracket::BracketState;
pub use cycle::{cycle_of, quasi_edge, Cycle};
pub use error::CrystalError;
pub use graph::{build_crystal, CrystalGraph};
pub use lusztig::{lusztig_crystal, LusztigMap};
pub use ops::{e, e_word, eps, eps_word, f, f_word, phi, phi_word};
pub use stembridge::{stembridge_check, stembridge_check_table, StembridgeReport, StembridgeViolation};
