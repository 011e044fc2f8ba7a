use std::collections::BTreeSet;

use cskit_tableaux::{enumerate_syt, word, Interval, Partition, Tableau};

use crate::SkeletonGraph;

/// The dual equivalence graph on `SYT(λ)`: an undirected edge `{T, D_i(T)}`
/// labelled `i` whenever `D_i` moves `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualEquivalenceGraph {
    pub vertices: Vec<Tableau>,
    /// `(u, v, i)` with `u < v`.
    pub edges: Vec<(usize, usize, usize)>,
}

/// The elementary dual equivalence `D_i` on a permutation, `1 < i < n`.
///
/// Among the letters `i-1, i, i+1`, if `i` sits between the other two nothing
/// changes; if `i-1` sits in the middle, `i` and `i+1` swap; if `i+1` sits in
/// the middle, `i-1` and `i` swap.
pub fn dual_equivalence(pi: &[usize], i: usize) -> Vec<usize> {
    let pos = word::positions(pi);
    let (a, b, c) = (pos[i - 1], pos[i], pos[i + 1]);
    let middle = |x: usize, y: usize, z: usize| (y < x && x < z) || (z < x && x < y);
    let swap = if middle(b, a, c) {
        None
    } else if middle(a, b, c) {
        Some((i, i + 1))
    } else {
        Some((i - 1, i))
    };
    let mut out = pi.to_vec();
    if let Some((x, y)) = swap {
        out.swap(pos[x], pos[y]);
    }
    out
}

pub fn dual_equivalence_graph(shape: &Partition) -> DualEquivalenceGraph {
    let vertices = enumerate_syt(shape);
    let n = shape.size();
    let mut edges = BTreeSet::new();
    for (u, t) in vertices.iter().enumerate() {
        let pi = t.reading_word();
        for i in 2..n {
            let img = dual_equivalence(&pi, i);
            if img != pi {
                let w = t.with_reading_word(&img).expect("D_i preserves standard tableaux");
                let v = vertices.iter().position(|x| *x == w).expect("image is a vertex");
                edges.insert((u.min(v), u.max(v), i));
            }
        }
    }
    DualEquivalenceGraph { vertices, edges: edges.into_iter().collect() }
}

/// Compares the labelled edges of `DE(λ)` with the skeleton edges whose
/// interval has length 3, label `i` matching `[i-1, i+1]`. Returns the
/// mismatches.
pub fn de_subgraph_check(g: &SkeletonGraph) -> Vec<String> {
    let de = dual_equivalence_graph(g.shape());
    let from_de: BTreeSet<(usize, usize, usize)> = de.edges.iter().copied().collect();
    let from_cs: BTreeSet<(usize, usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.interval.len() == 3)
        .map(|e| (e.src.min(e.dst), e.src.max(e.dst), e.interval.mid()))
        .collect();
    let show = |&(u, v, i): &(usize, usize, usize)| {
        format!("{} -- {} via {}", g.vertex(u).compact(), g.vertex(v).compact(), Interval::new(i - 1, i + 1))
    };
    let mut out: Vec<String> = from_de.difference(&from_cs).map(|e| format!("missing in skeleton: {}", show(e))).collect();
    out.extend(from_cs.difference(&from_de).map(|e| format!("missing in DE: {}", show(e))));
    for e in g.edges().iter().filter(|e| e.interval.len() == 3) {
        if e.cycle.len() != 2 {
            out.push(format!("cycle {} on a length-3 edge is not a transposition", e.cycle));
        }
    }
    out
}
