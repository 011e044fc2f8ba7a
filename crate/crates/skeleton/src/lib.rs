//! Crystal skeletons: the quotient of a type A crystal by its quasi-crystal
//! components, built directly from Dyck pattern intervals or by contraction.

mod build;
mod de;
mod dyck;
mod edge;
mod error;
mod fans;
mod graph;
mod lusztig;
mod restrict;
mod scc;
mod top;
mod transition;
mod view;

pub use build::{build_skeleton_contraction, build_skeleton_direct};
pub use de::{de_subgraph_check, dual_equivalence, dual_equivalence_graph, DualEquivalenceGraph};
pub use dyck::{dyck_cycle, dyck_intervals, is_dyck_interval, is_dyck_interval_bracket};
pub use edge::{EdgeKind, SkeletonEdge};
pub use error::SkeletonError;
pub use fans::{fan_check, in_fan, in_out_edge_check, out_fan, Fan};
pub use graph::SkeletonGraph;
pub use lusztig::{g1_gn_check, lusztig_invariance_check, lusztig_skeleton, partial_evacuation, restricted_lusztig_check};
pub use restrict::{branch, check_restriction, restrict_skeleton, restricted_tableau, RestrictedComponent};
pub use scc::{is_strongly_connected, scc};
pub use top::{check_block_destandardization, string_length_check, target_eps_offsets, top_label, top_subcrystal, TopSubcrystal};
pub use transition::{apply_edge, classify_edge, descent_transition, has_rectangle, infer_kind, placement};
pub use view::{Arrow, EdgeView};
