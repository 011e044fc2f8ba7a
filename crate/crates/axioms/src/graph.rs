use cskit_skeleton::{infer_kind, Arrow, EdgeView, SkeletonGraph};
use cskit_tableaux::{Composition, Interval};
use petgraph::unionfind::UnionFind;

use crate::AxiomError;

/// A directed graph with vertices labelled by compositions of `n` and edges
/// labelled by intervals of `[1, n]`.
///
/// Edge types are never taken from the input: each is inferred from the two
/// endpoint labels and the interval, and is `None` when no case fits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    labels: Vec<Composition>,
    edges: Vec<Arrow>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(n: usize, labels: Vec<Composition>, edges: &[(usize, usize, Interval)]) -> Result<Self, AxiomError> {
        if n == 0 {
            return Err(AxiomError::ZeroN);
        }
        if labels.is_empty() {
            return Err(AxiomError::Empty);
        }
        for (vertex, a) in labels.iter().enumerate() {
            if a.size() != n {
                return Err(AxiomError::LabelSize { vertex, label: a.to_string(), n });
            }
        }
        let count = labels.len();
        let mut arrows = Vec::with_capacity(edges.len());
        for (edge, &(src, dst, interval)) in edges.iter().enumerate() {
            for vertex in [src, dst] {
                if vertex >= count {
                    return Err(AxiomError::Endpoint { edge, vertex, count });
                }
            }
            if interval.lo < 1 || interval.hi > n {
                return Err(AxiomError::IntervalRange { edge, interval, n });
            }
            let kind = infer_kind(&labels[src], interval, &labels[dst]);
            arrows.push(Arrow { src, interval, dst, kind });
        }
        arrows.sort();
        let mut out = vec![Vec::new(); count];
        let mut inc = vec![Vec::new(); count];
        for (k, a) in arrows.iter().enumerate() {
            out[a.src].push(k);
            inc[a.dst].push(k);
        }
        for list in &mut inc {
            list.sort_by_key(|&k| (arrows[k].interval, arrows[k].src));
        }
        Ok(LabeledGraph { n, labels, edges: arrows, out, inc })
    }

    /// Forgets the tableaux of a skeleton, keeping descent compositions and intervals.
    pub fn from_skeleton(g: &SkeletonGraph) -> Self {
        let labels = (0..g.len()).map(|v| g.des(v).clone()).collect();
        let edges: Vec<_> = g.edges().iter().map(|e| (e.src, e.dst, e.interval)).collect();
        LabeledGraph::new(g.shape().size().max(1), labels, &edges).expect("skeletons are well formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Composition] {
        &self.labels
    }

    /// Edges sorted by source, interval, target.
    pub fn edges(&self) -> &[Arrow] {
        &self.edges
    }

    /// Triples `(src, dst, interval)` in edge order.
    pub fn edge_triples(&self) -> Vec<(usize, usize, Interval)> {
        self.edges.iter().map(|a| (a.src, a.dst, a.interval)).collect()
    }

    /// `L_n(G)`: labels reversed, edges reversed, intervals reflected.
    pub fn lusztig(&self) -> LabeledGraph {
        let labels = self.labels.iter().map(Composition::rev).collect();
        let edges: Vec<_> = self.edges.iter().map(|a| (a.dst, a.src, a.interval.reflect(self.n))).collect();
        LabeledGraph::new(self.n, labels, &edges).expect("reflection keeps intervals in range")
    }

    /// `G_[1,n-1]`: `n` removed from every label, edges with `n ∈ I` dropped.
    /// `None` when `n = 1`.
    pub fn branch_last(&self) -> Option<LabeledGraph> {
        if self.n < 2 {
            return None;
        }
        let labels = self.labels.iter().map(Composition::without_last).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|a| a.interval.hi < self.n)
            .map(|a| (a.src, a.dst, a.interval))
            .collect();
        Some(LabeledGraph::new(self.n - 1, labels, &edges).expect("restriction keeps labels valid"))
    }

    /// `G_[2,n]`: `1` removed from every label, edges with `1 ∈ I` dropped,
    /// the rest shifted down by one. `None` when `n = 1`.
    pub fn branch_first(&self) -> Option<LabeledGraph> {
        if self.n < 2 {
            return None;
        }
        let labels = self.labels.iter().map(Composition::without_first).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|a| Some((a.src, a.dst, a.interval.shift_down(1)?)))
            .collect();
        Some(LabeledGraph::new(self.n - 1, labels, &edges).expect("restriction keeps labels valid"))
    }

    /// Weakly connected components as induced subgraphs, each with the
    /// original vertex ids it came from (sorted), ordered by least vertex.
    pub fn components(&self) -> Vec<(Vec<usize>, LabeledGraph)> {
        let mut uf = UnionFind::new(self.len());
        for a in &self.edges {
            uf.union(a.src, a.dst);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.len()];
        for v in 0..self.len() {
            let root = uf.find(v);
            if slot[root] == usize::MAX {
                slot[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[root]].push(v);
        }
        groups
            .into_iter()
            .map(|vs| {
                let mut local = vec![usize::MAX; self.len()];
                for (k, &v) in vs.iter().enumerate() {
                    local[v] = k;
                }
                let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
                let edges: Vec<_> = self
                    .edges
                    .iter()
                    .filter(|a| local[a.src] != usize::MAX)
                    .map(|a| (local[a.src], local[a.dst], a.interval))
                    .collect();
                let sub = LabeledGraph::new(self.n, labels, &edges).expect("subgraph of a valid graph");
                (vs, sub)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The same graph with its vertices renumbered: vertex `v` becomes
    /// `perm[v]`. Panics unless `perm` is a permutation of the vertex ids.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        let mut labels = self.labels.clone();
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        let edges: Vec<_> = self.edges.iter().map(|a| (perm[a.src], perm[a.dst], a.interval)).collect();
        LabeledGraph::new(self.n, labels, &edges).expect("renumbering keeps the graph valid")
    }
}

impl EdgeView for LabeledGraph {
    fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    fn n(&self) -> usize {
        self.n
    }

    fn label(&self, v: usize) -> &Composition {
        &self.labels[v]
    }

    fn outgoing(&self, v: usize) -> Vec<Arrow> {
        self.out[v].iter().map(|&k| self.edges[k]).collect()
    }

    fn incoming(&self, v: usize) -> Vec<Arrow> {
        self.inc[v].iter().map(|&k| self.edges[k]).collect()
    }
}
