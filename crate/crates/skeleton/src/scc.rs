use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::EdgeView;

/// Strongly connected components, each sorted, ordered by least vertex.
pub fn scc<G: EdgeView>(g: &G) -> Vec<Vec<usize>> {
    let mut dg = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| dg.add_node(())).collect();
    for a in g.arrows() {
        dg.add_edge(nodes[a.src], nodes[a.dst], ());
    }
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&dg)
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    comps.sort();
    comps
}

pub fn is_strongly_connected<G: EdgeView>(g: &G) -> bool {
    scc(g).len() <= 1
}
