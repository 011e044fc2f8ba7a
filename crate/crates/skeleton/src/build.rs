use std::collections::{BTreeMap, HashMap};

use cskit_crystal::{build_crystal, cycle_of, BracketState};
use cskit_tableaux::{enumerate_syt, word, Interval, Partition};

use crate::{apply_edge, classify_edge, dyck_intervals, EdgeKind, SkeletonEdge, SkeletonError, SkeletonGraph};

/// `CS(λ)` from the Dyck pattern intervals of each standard tableau.
pub fn build_skeleton_direct(shape: &Partition) -> Result<SkeletonGraph, SkeletonError> {
    let vertices = enumerate_syt(shape);
    let mut edges = Vec::new();
    let ids: HashMap<Vec<usize>, usize> =
        vertices.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
    for (src, t) in vertices.iter().enumerate() {
        for iv in dyck_intervals(&t.reading_word()) {
            let (target, cycle) = apply_edge(t, iv)?;
            let dst = ids.get(&target.reading_word()).copied().ok_or_else(|| SkeletonError::BadVertex(target.compact()))?;
            let kind = classify_edge(t, iv)?;
            edges.push(SkeletonEdge { src, interval: iv, dst, cycle, kind });
        }
    }
    SkeletonGraph::new(shape.clone(), edges)
}

/// `CS(λ)` by contracting the quasi-crystal components of `B(λ)_{|λ|}`.
///
/// A crystal edge `f_i(b) = b′` between different standardizations gives the
/// interval `[π_p − n_left, π_p + n_left + 2 n_right]` with `π = std(row(b))`.
/// Its type is read off the change in the number of descent blocks.
pub fn build_skeleton_contraction(shape: &Partition) -> Result<SkeletonGraph, SkeletonError> {
    let n = shape.size();
    let crystal = build_crystal(shape, n.max(1))?;
    let syt = enumerate_syt(shape);
    let id: BTreeMap<Vec<usize>, usize> =
        syt.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
    let std_id: Vec<usize> = crystal
        .vertices()
        .iter()
        .map(|b| id[&word::standardize(&b.reading_word())])
        .collect();
    let mut found: BTreeMap<(usize, Interval), SkeletonEdge> = BTreeMap::new();
    for (v, i, w) in crystal.edges() {
        let (src, dst) = (std_id[v], std_id[w]);
        if src == dst {
            continue;
        }
        let b = &crystal.vertices()[v];
        let row = b.reading_word();
        let state = BracketState::new(&row, i);
        let (p, nl, nr) = match (state.p(), state.n_left(), state.n_right()) {
            (Some(p), Some(nl), Some(nr)) => (p, nl, nr),
            _ => unreachable!("f_i is defined on b"),
        };
        let pi_p = word::standardize(&row)[p];
        let interval = Interval::new(pi_p - nl, pi_p + nl + 2 * nr);
        let cycle = cycle_of(b, i)?;
        let delta = syt[dst].descent_composition().len() as isize - syt[src].descent_composition().len() as isize;
        let conflict = || SkeletonError::Conflict { tableau: syt[src].compact(), interval };
        let kind = EdgeKind::from_length_change(delta).ok_or_else(conflict)?;
        if interval.len() < 3 {
            return Err(conflict());
        }
        let edge = SkeletonEdge { src, interval, dst, cycle, kind };
        match found.get(&(src, interval)) {
            Some(old) if *old != edge => return Err(conflict()),
            Some(_) => {}
            None => {
                found.insert((src, interval), edge);
            }
        }
    }
    SkeletonGraph::new(shape.clone(), found.into_values().collect())
}
