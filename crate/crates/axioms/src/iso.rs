use std::collections::BTreeMap;

use cskit_tableaux::{Composition, Interval};
use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::DiGraph;

use crate::LabeledGraph;

/// Parallel edges are merged into one edge carrying the sorted list of their
/// intervals, so the matching runs on a simple digraph.
fn simple(g: &LabeledGraph) -> DiGraph<Composition, Vec<Interval>> {
    let mut dg = DiGraph::new();
    let nodes: Vec<_> = g.labels().iter().map(|a| dg.add_node(a.clone())).collect();
    let mut merged: BTreeMap<(usize, usize), Vec<Interval>> = BTreeMap::new();
    for a in g.edges() {
        merged.entry((a.src, a.dst)).or_default().push(a.interval);
    }
    for ((s, d), mut ivs) in merged {
        ivs.sort();
        dg.add_edge(nodes[s], nodes[d], ivs);
    }
    dg
}

fn label_census(g: &LabeledGraph) -> (Vec<&Composition>, Vec<Interval>) {
    let mut labels: Vec<_> = g.labels().iter().collect();
    labels.sort();
    let mut ivs: Vec<_> = g.edges().iter().map(|a| a.interval).collect();
    ivs.sort();
    (labels, ivs)
}

/// Whether a bijection of vertices preserves vertex labels and the multiset
/// of labelled edges.
pub fn isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.n() != b.n() || a.len() != b.len() || a.edges().len() != b.edges().len() {
        return false;
    }
    if label_census(a) != label_census(b) {
        return false;
    }
    is_isomorphic_matching(&simple(a), &simple(b), |x, y| x == y, |x, y| x == y)
}
