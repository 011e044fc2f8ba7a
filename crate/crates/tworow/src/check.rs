use std::collections::BTreeSet;

use cskit_skeleton::{build_skeleton_direct, scc, EdgeKind, SkeletonGraph};
use cskit_tableaux::{Interval, Partition};

use crate::edges::{edge_type_at, local_edges, EdgeType};
use crate::evac::{evac_path, EvacMethod};
use crate::path::{path_of, tableau_of, LatticePath};
use crate::rect::{rcomp, scc_by_rcomp};
use crate::transition::two_row_transition;
use crate::TwoRowError;

/// An edge of the path model: `src` and `dst` index [`PathSkeleton::paths`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathEdge {
    pub src: usize,
    pub interval: Interval,
    pub dst: usize,
    pub ty: EdgeType,
    pub kind: EdgeKind,
}

/// The crystal skeleton of a two-row shape computed on lattice paths alone.
#[derive(Debug, Clone)]
pub struct PathSkeleton {
    pub paths: Vec<LatticePath>,
    pub edges: Vec<PathEdge>,
}

impl PathSkeleton {
    pub fn new(l1: usize, l2: usize) -> Result<Self, TwoRowError> {
        let paths = LatticePath::all(l1, l2)?;
        let mut edges = Vec::new();
        for (src, p) in paths.iter().enumerate() {
            for e in local_edges(p) {
                let dst = paths.binary_search(&e.target).expect("targets have the same shape");
                let kind = two_row_transition(p, e.interval, e.ty)?;
                edges.push(PathEdge { src, interval: e.interval, dst, ty: e.ty, kind });
            }
        }
        Ok(PathSkeleton { paths, edges })
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &PathEdge> {
        self.edges.iter().filter(move |e| e.src == v)
    }
}

fn direct(l1: usize, l2: usize) -> Result<SkeletonGraph, String> {
    let shape = Partition::from_padded(vec![l1, l2]).map_err(|e| e.to_string())?;
    build_skeleton_direct(&shape).map_err(|e| e.to_string())
}

/// Vertices, descent compositions, edges and edge kinds of the path model
/// against the skeleton built from tableaux.
pub fn compare_with_direct(l1: usize, l2: usize) -> Result<(), String> {
    let ps = PathSkeleton::new(l1, l2).map_err(|e| e.to_string())?;
    let g = direct(l1, l2)?;
    if g.len() != ps.paths.len() {
        return Err(format!("{} tableaux but {} paths", g.len(), ps.paths.len()));
    }
    let id = |p: &LatticePath| g.id_of(&tableau_of(p)).ok_or_else(|| format!("no tableau for path {p}"));
    for (v, p) in ps.paths.iter().enumerate() {
        let gv = id(p)?;
        if g.des(gv) != &p.descent_composition() {
            return Err(format!("path {p}: Des {} but tableau has {}", p.descent_composition(), g.des(gv)));
        }
        let mine: BTreeSet<_> = ps.out_edges(v).map(|e| (e.interval, id(&ps.paths[e.dst]), e.kind)).collect();
        let theirs: BTreeSet<_> = g.out_edges(gv).map(|e| (e.interval, Ok(e.dst), e.kind)).collect();
        if mine != theirs {
            return Err(format!("path {p}: edges {mine:?} but skeleton has {theirs:?}"));
        }
    }
    Ok(())
}

/// Strongly connected components of the skeleton are the `rcomp` classes.
pub fn check_scc(l1: usize, l2: usize) -> Result<(), String> {
    let g = direct(l1, l2)?;
    let paths = |c: &[usize]| c.iter().map(|&v| path_of(g.vertex(v)).map_err(|e| e.to_string())).collect::<Result<BTreeSet<_>, _>>();
    let from_graph = scc(&g).iter().map(|c| paths(c)).collect::<Result<BTreeSet<_>, _>>()?;
    let all = LatticePath::all(l1, l2).map_err(|e| e.to_string())?;
    let from_rcomp: BTreeSet<BTreeSet<_>> = scc_by_rcomp(&all).into_iter().map(|c| c.into_iter().collect()).collect();
    if from_graph != from_rcomp {
        return Err(format!("shape ({l1},{l2}): {} components but {} rcomp classes", from_graph.len(), from_rcomp.len()));
    }
    Ok(())
}

/// Each path evacuation method against evacuating the tableau.
pub fn check_evacuation(l1: usize, l2: usize) -> Result<(), String> {
    for p in LatticePath::all(l1, l2).map_err(|e| e.to_string())? {
        let t = tableau_of(&p).evacuate().map_err(|e| e.to_string())?;
        let want = path_of(&t).map_err(|e| e.to_string())?;
        for m in EvacMethod::ALL {
            let got = evac_path(&p, m);
            if got != want {
                return Err(format!("evac of {p} by {m} is {got}, expected {want}"));
            }
        }
    }
    Ok(())
}

/// For each edge `p → p'` labelled `I`, the edge `evac(p') → evac(p)`
/// labelled `I` reflected exists; when `I` lies in a β block of `rcomp(p)`
/// exactly one of the two is type A, otherwise both are.
pub fn check_lusztig_types(l1: usize, l2: usize) -> Result<(), String> {
    let ps = PathSkeleton::new(l1, l2).map_err(|e| e.to_string())?;
    let n = l1 + l2;
    for e in &ps.edges {
        let (p, q) = (&ps.paths[e.src], &ps.paths[e.dst]);
        let (lp, lq) = (evac_path(p, EvacMethod::Signs), evac_path(q, EvacMethod::Signs));
        let iv = e.interval.reflect(n);
        let dual = edge_type_at(&lq, iv).ok_or_else(|| format!("no edge {iv} out of {lq} (dual of {p} -{}-> {q})", e.interval))?;
        let inside = rcomp(p).beta_containing(e.interval).is_some();
        let ok = if inside { (e.ty == EdgeType::A) == (dual == EdgeType::B) } else { e.ty == EdgeType::A && dual == EdgeType::A };
        if !ok {
            return Err(format!("{p} -{}-> {q} is type {} but {lq} -{iv}-> {lp} is type {dual}", e.interval, e.ty));
        }
    }
    Ok(())
}

/// `rcomp` is unchanged along type B edges and weakly rises along type A
/// edges, in the order of [`RComp::dominates`].
pub fn check_rcomp_monotone(l1: usize, l2: usize) -> Result<(), String> {
    let ps = PathSkeleton::new(l1, l2).map_err(|e| e.to_string())?;
    for e in &ps.edges {
        let (p, q) = (&ps.paths[e.src], &ps.paths[e.dst]);
        let (a, b) = (rcomp(p), rcomp(q));
        let ok = match e.ty {
            EdgeType::B => a == b,
            EdgeType::A => b.dominates(&a),
        };
        if !ok {
            return Err(format!("{p} -{}-> {q} (type {}): rcomp {a} then {b}", e.interval, e.ty));
        }
    }
    Ok(())
}
