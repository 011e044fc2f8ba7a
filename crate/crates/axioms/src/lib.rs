//! Verifiers for the GL_n, S_n and local axiom systems on graphs whose
//! vertices carry compositions and whose edges carry intervals, and the
//! classifier of commutation configurations.

mod commutation;
mod error;
mod graph;
mod iso;
mod mutate;
mod report;
mod verify;

pub use commutation::{commutation_case, commutation_matches, outgoing_pairs, CaseMatch, CommutationCase};
pub use error::AxiomError;
pub use graph::LabeledGraph;
pub use iso::isomorphic;
pub use mutate::{mutation_suite, Mutation};
pub use report::{AxiomReport, System, Verdict};
pub use verify::{source_labels, verify_gl, verify_local, verify_sn};
