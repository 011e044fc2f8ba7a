//! Two-row crystal skeletons on lattice paths.
//!
//! A standard tableau of shape `(λ₁, λ₂)` is the path with `p_i = -1` when
//! `i` is in the bottom row and `p_i = +1` otherwise; its partial sums stay
//! at or below zero. Edges, strongly connected components and evacuation
//! all have closed forms on paths.

mod check;
mod edges;
mod error;
mod evac;
mod path;
mod rect;
mod transition;

pub use check::{check_evacuation, check_lusztig_types, check_rcomp_monotone, check_scc, compare_with_direct, PathEdge, PathSkeleton};
pub use edges::{apply_path_edge, edge_type_at, local_edges, EdgeType, LocalEdge};
pub use error::TwoRowError;
pub use evac::{evac_path, sharp, EvacMethod};
pub use path::{path_of, tableau_of, LatticePath, Step};
pub use rect::{lit_down_steps, rcomp, rect_decomp, scc_by_rcomp, RComp, RectDecomp};
pub use transition::two_row_transition;
