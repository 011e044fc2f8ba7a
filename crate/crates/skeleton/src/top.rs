use std::collections::{BTreeMap, BTreeSet, VecDeque};

use cskit_crystal::{build_crystal, CrystalGraph};
use cskit_tableaux::{Composition, Partition};

use crate::{placement, Arrow, EdgeView, SkeletonGraph};

/// The subgraph `G_s` on the vertices with the fewest descent blocks,
/// matched with the crystal `B(λ)_s`.
#[derive(Debug, Clone)]
pub struct TopSubcrystal {
    pub lambda: Partition,
    pub level: usize,
    pub vertices: Vec<usize>,
    /// `(src, interval, dst, j)`: the edge acts as `f_j` (1-based).
    pub edges: Vec<(Arrow, usize)>,
    pub crystal: CrystalGraph,
    /// Vertex of `G` to vertex of the crystal.
    pub map: BTreeMap<usize, usize>,
}

/// The label dominating every other label, if there is one and it is a partition.
pub fn top_label<G: EdgeView>(g: &G) -> Option<Partition> {
    let labels: BTreeSet<&Composition> = (0..g.vertex_count()).map(|v| g.label(v)).collect();
    let top = labels.iter().find(|a| labels.iter().all(|b| a.dominates(b)))?;
    Partition::new(top.parts().to_vec()).ok()
}

/// Extracts `G_s`, reads each edge as `f_j` for the blocks `j, j+1` holding
/// its interval, and matches it with `B(λ)_s` starting from the vertex
/// labelled `λ`.
pub fn top_subcrystal<G: EdgeView>(g: &G) -> Result<TopSubcrystal, String> {
    let lambda = top_label(g).ok_or("no label dominates all others")?;
    let level = (0..g.vertex_count()).map(|v| g.label(v).len()).min().ok_or("empty graph")?;
    if level != lambda.len() {
        return Err(format!("shortest label has {level} parts but {lambda} has {}", lambda.len()));
    }
    let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.label(v).len() == level).collect();
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();
    let mut edges = Vec::new();
    let mut out_col: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut in_col: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &v in &vertices {
        for a in g.outgoing(v).into_iter().filter(|a| inside.contains(&a.dst)) {
            let j = placement(g.label(v), a.interval).ok_or_else(|| format!("edge {v} -{}-> {} straddles no two blocks", a.interval, a.dst))? + 1;
            if out_col.insert((v, j), a.dst).is_some() || in_col.insert((a.dst, j), v).is_some() {
                return Err(format!("two f_{j} edges at vertex {v}"));
            }
            edges.push((a, j));
        }
    }
    let crystal = build_crystal(&lambda, level).map_err(|e| e.to_string())?;
    let roots: Vec<usize> = vertices.iter().copied().filter(|&v| g.label(v).parts() == lambda.parts()).collect();
    let [root] = roots[..] else {
        return Err(format!("{} vertices carry the label {lambda}", roots.len()));
    };
    let mut map = BTreeMap::new();
    let mut back = BTreeMap::new();
    map.insert(root, crystal.highest());
    back.insert(crystal.highest(), root);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let b = map[&v];
        if crystal.weight(b) != g.label(v).parts() {
            return Err(format!("vertex {v} has label {} but its crystal image has another weight", g.label(v)));
        }
        for j in 1..level {
            let pairs = [(out_col.get(&(v, j)), crystal.f(b, j)), (in_col.get(&(v, j)), crystal.e(b, j))];
            for (x, y) in pairs {
                match (x, y) {
                    (None, None) => {}
                    (Some(&x), Some(y)) => {
                        if map.get(&x).is_some_and(|&z| z != y) || back.get(&y).is_some_and(|&z| z != x) {
                            return Err(format!("inconsistent matching at vertex {x}"));
                        }
                        if map.insert(x, y).is_none() {
                            back.insert(y, x);
                            queue.push_back(x);
                        }
                    }
                    _ => return Err(format!("f_{j}/e_{j} at vertex {v} disagrees with the crystal")),
                }
            }
        }
    }
    if map.len() != vertices.len() || map.len() != crystal.len() {
        return Err(format!("matched {} of {} vertices against {} crystal elements", map.len(), vertices.len(), crystal.len()));
    }
    Ok(TopSubcrystal { lambda, level, vertices, edges, crystal, map })
}

/// String lengths read off the labels at the source of each `f_j` edge:
/// `φ_j = min I − min α^(j) + 1` and `ε_j = max α^(j+1) − max I`. Vertices
/// with no `f_j` edge must have `φ_j = 0`.
pub fn string_length_check<G: EdgeView>(g: &G, top: &TopSubcrystal) -> Result<(), String> {
    let mut has = BTreeSet::new();
    for (a, j) in &top.edges {
        let alpha = g.label(a.src);
        let b = top.map[&a.src];
        let phi = a.interval.lo + 1 - alpha.block(j - 1).lo;
        let eps = alpha.block(*j).hi - a.interval.hi;
        if top.crystal.phi(b, *j) != phi || top.crystal.eps(b, *j) != eps {
            return Err(format!("string lengths at vertex {} for j={j}", a.src));
        }
        has.insert((a.src, *j));
    }
    for &v in &top.vertices {
        for j in 1..top.level {
            if !has.contains(&(v, j)) && top.crystal.phi(top.map[&v], j) != 0 {
                return Err(format!("vertex {v} has no f_{j} edge but φ_{j} > 0"));
            }
        }
    }
    Ok(())
}

/// For each `f_j` edge `v → w`, the true `ε_j(w)` minus `max β^(j+1) − max I`
/// computed from the target label `β`. The set of differences observed.
pub fn target_eps_offsets<G: EdgeView>(g: &G, top: &TopSubcrystal) -> BTreeSet<isize> {
    top.edges
        .iter()
        .map(|(a, j)| {
            let beta = g.label(a.dst);
            let formula = beta.block(*j).hi as isize - a.interval.hi as isize;
            top.crystal.eps(top.map[&a.dst], *j) as isize - formula
        })
        .collect()
}

/// Each `G_s` vertex `T` matches the crystal element obtained by writing `j`
/// in place of every letter of the block `α^(j)`.
pub fn check_block_destandardization(g: &SkeletonGraph, top: &TopSubcrystal) -> Result<(), String> {
    for &v in &top.vertices {
        let alpha = g.des(v);
        let b = g
            .vertex(v)
            .map_entries(|x| alpha.block_of(x).expect("letter in a block") + 1)
            .map_err(|e| e.to_string())?;
        if top.crystal.id_of(&b) != Some(top.map[&v]) {
            return Err(format!("{} does not destandardize to its matched crystal element", g.vertex(v).compact()));
        }
    }
    Ok(())
}
