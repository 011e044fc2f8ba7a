//! Front end for building crystal skeletons, exporting them as JSON or DOT,
//! and running the axiom verifiers and invariant suites.

mod commands;
mod document;
mod dot;
mod error;
mod shape;
mod suite;

pub use commands::{
    build, check_figures, cmd_branch, cmd_build, cmd_de, cmd_scc, cmd_suite, cmd_tworow_check, cmd_tworow_show, cmd_verify, max_n_cap,
    Format, GraphSource, Method, Output, SystemArg, DEFAULT_MAX_N,
};
pub use document::{EdgeDoc, GraphDocument, VertexDoc, SCHEMA_VERSION};
pub use dot::{de_to_dot, to_dot};
pub use error::CliError;
pub use shape::{parse_shape, parse_two_row};
pub use suite::{check_shape, commutation_coverage, render, run_suite, SuiteRow, CHECKS};
