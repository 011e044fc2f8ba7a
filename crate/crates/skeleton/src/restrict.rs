use std::collections::{BTreeMap, BTreeSet};

use cskit_tableaux::{Composition, Interval, Partition, Tableau};
use petgraph::unionfind::UnionFind;

use crate::{build_skeleton_direct, SkeletonError, SkeletonGraph};

/// One weakly connected piece of `G_[a,b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedComponent {
    /// Shape of `jdt(T_[a,b])`, common to the whole component.
    pub shape: Partition,
    pub vertices: Vec<usize>,
    /// Ids of the edges of `G` with interval inside `[a,b]` within this component.
    pub edges: Vec<usize>,
}

/// `rectify(T_[a,b])` with letters shifted down to start at 1.
pub fn restricted_tableau(t: &Tableau, iv: Interval) -> Result<Tableau, SkeletonError> {
    let d = iv.lo - 1;
    Ok(t.restrict(iv)?.rectify().map_entries(|x| x - d)?)
}

/// Keeps the edges with interval inside `iv` and splits the vertices into
/// weakly connected components.
pub fn restrict_skeleton(g: &SkeletonGraph, iv: Interval) -> Result<Vec<RestrictedComponent>, SkeletonError> {
    let mut uf = UnionFind::<usize>::new(g.len());
    let kept: Vec<usize> = (0..g.edges().len()).filter(|&k| g.edges()[k].interval.is_subset_of(&iv)).collect();
    for &k in &kept {
        let e = &g.edges()[k];
        uf.union(e.src, e.dst);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.len() {
        groups.entry(uf.find(v)).or_default().push(v);
    }
    let mut comps: Vec<RestrictedComponent> = Vec::new();
    for (_, vertices) in groups {
        let shape = restricted_tableau(g.vertex(vertices[0]), iv)?.shape();
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        let edges = kept.iter().copied().filter(|&k| set.contains(&g.edges()[k].src)).collect();
        comps.push(RestrictedComponent { shape, vertices, edges });
    }
    comps.sort_by_key(|c| c.vertices[0]);
    Ok(comps)
}

fn descents_within(alpha: &Composition, iv: Interval) -> Vec<usize> {
    let d = iv.lo - 1;
    alpha.descent_set().into_iter().filter(|&x| x >= iv.lo && x < iv.hi).map(|x| x - d).collect()
}

/// Checks that every component of `G_[a,b]` is a copy of `CS(μ)` under
/// `T ↦ rectify(T_[a,b])`: a bijection on vertices carrying edges, shifted
/// intervals and restricted descent sets.
///
/// Cycles and types are not compared. Rectification keeps `π|_I` only up to
/// Knuth equivalence, which can move the cycle inside `I`, and the type
/// depends on letters just outside `I`.
pub fn check_restriction(g: &SkeletonGraph, iv: Interval) -> Result<Vec<RestrictedComponent>, String> {
    let comps = restrict_skeleton(g, iv).map_err(|e| e.to_string())?;
    let d = iv.lo - 1;
    let mut cache: BTreeMap<Partition, SkeletonGraph> = BTreeMap::new();
    for c in &comps {
        let cs = match cache.get(&c.shape) {
            Some(cs) => cs,
            None => {
                let cs = build_skeleton_direct(&c.shape).map_err(|e| e.to_string())?;
                cache.entry(c.shape.clone()).or_insert(cs)
            }
        };
        let mut image = BTreeMap::new();
        for &v in &c.vertices {
            let s = restricted_tableau(g.vertex(v), iv).map_err(|e| e.to_string())?;
            let w = cs.id_of(&s).ok_or_else(|| format!("{} restricts outside SYT{}", g.vertex(v).compact(), c.shape))?;
            if descents_within(g.des(v), iv) != cs.des(w).descent_set() {
                return Err(format!("descent set of {} does not restrict to that of {}", g.vertex(v).compact(), s.compact()));
            }
            image.insert(v, w);
        }
        let targets: BTreeSet<usize> = image.values().copied().collect();
        if targets.len() != c.vertices.len() || targets.len() != cs.len() {
            return Err(format!("component of {} is not in bijection with SYT{}", g.vertex(c.vertices[0]).compact(), c.shape));
        }
        let mapped: BTreeSet<(usize, Interval, usize)> = c
            .edges
            .iter()
            .map(|&k| {
                let e = &g.edges()[k];
                (image[&e.src], e.interval.shift_down(d).expect("inside [a,b]"), image[&e.dst])
            })
            .collect();
        let expected: BTreeSet<(usize, Interval, usize)> = cs.edges().iter().map(|e| (e.src, e.interval, e.dst)).collect();
        if mapped != expected || mapped.len() != c.edges.len() {
            return Err(format!("edges of the component of {} differ from CS{}", g.vertex(c.vertices[0]).compact(), c.shape));
        }
    }
    Ok(comps)
}

/// Components of `G_[1,n-1]`, each checked against `CS(λ⁻)`; the shapes must
/// be exactly the partitions obtained by removing one box, once each.
pub fn branch(g: &SkeletonGraph) -> Result<Vec<RestrictedComponent>, String> {
    let n = g.shape().size();
    if n < 2 {
        return Ok(Vec::new());
    }
    let comps = check_restriction(g, Interval::new(1, n - 1))?;
    let mut got: Vec<Partition> = comps.iter().map(|c| c.shape.clone()).collect();
    let mut want: Vec<Partition> = g.shape().minus_one_box().into_iter().map(|(_, p)| p).collect();
    got.sort();
    want.sort();
    if got != want {
        let show = |v: &[Partition]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
        return Err(format!("branching shapes {} instead of {}", show(&got), show(&want)));
    }
    Ok(comps)
}
