use cskit_skeleton::EdgeKind;
use cskit_tableaux::Interval;

use crate::edges::{edge_type_at, EdgeType};
use crate::path::{LatticePath, Step};
use crate::TwoRowError;

/// The descent-composition change along the type `ty` edge `I = [i, i+2m]`
/// out of `p`, read off the steps just outside `I`.
///
/// Type A increases when `p_{i+2m+1} = +1` and preserves otherwise, including
/// when `I` ends at `n`. Type B decreases when `p_{i-1} = -1` and preserves
/// otherwise, including when `i = 1`.
pub fn two_row_transition(p: &LatticePath, iv: Interval, ty: EdgeType) -> Result<EdgeKind, TwoRowError> {
    if edge_type_at(p, iv) != Some(ty) {
        return Err(TwoRowError::NoEdge { path: p.to_string(), interval: iv, ty: ty.as_str() });
    }
    Ok(match ty {
        EdgeType::A if p.step(iv.hi + 1) == Some(Step::Up) => EdgeKind::Increasing,
        EdgeType::B if p.step(iv.lo.wrapping_sub(1)) == Some(Step::Down) => EdgeKind::Decreasing,
        _ => EdgeKind::Preserving,
    })
}
