use std::collections::HashMap;

use cskit_tableaux::{enumerate_syt, Composition, Interval, Partition, Tableau, Word};

use crate::{Arrow, EdgeView, SkeletonEdge, SkeletonError};

/// The crystal skeleton `CS(λ)`: standard tableaux joined by edges labelled
/// with Dyck pattern intervals, cycles and types.
///
/// Vertices are ordered by reading word; edges by source then interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    shape: Partition,
    vertices: Vec<Tableau>,
    des: Vec<Composition>,
    index: HashMap<Word, usize>,
    edges: Vec<SkeletonEdge>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl SkeletonGraph {
    /// Assembles a skeleton on `SYT(shape)` from edges between vertex ids of
    /// [`enumerate_syt`]. At most one edge may leave a vertex with a given interval.
    pub fn new(shape: Partition, mut edges: Vec<SkeletonEdge>) -> Result<Self, SkeletonError> {
        let vertices = enumerate_syt(&shape);
        let index: HashMap<Word, usize> =
            vertices.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
        let des = vertices.iter().map(Tableau::descent_composition).collect();
        edges.sort();
        for e in &edges {
            if e.src >= vertices.len() {
                return Err(SkeletonError::BadEndpoint(e.src));
            }
            if e.dst >= vertices.len() {
                return Err(SkeletonError::BadEndpoint(e.dst));
            }
        }
        for w in edges.windows(2) {
            if (w[0].src, w[0].interval) == (w[1].src, w[1].interval) {
                return Err(SkeletonError::Conflict {
                    tableau: vertices[w[0].src].compact(),
                    interval: w[0].interval,
                });
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            out[e.src].push(k);
            inc[e.dst].push(k);
        }
        for list in &mut inc {
            list.sort_by_key(|&k| (edges[k].interval, edges[k].src));
        }
        Ok(SkeletonGraph { shape, vertices, des, index, edges, out, inc })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Tableau {
        &self.vertices[v]
    }

    /// Descent composition of vertex `v`.
    pub fn des(&self, v: usize) -> &Composition {
        &self.des[v]
    }

    pub fn id_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&t.reading_word()).copied()
    }

    pub fn edges(&self) -> &[SkeletonEdge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &SkeletonEdge> {
        self.out[v].iter().map(|&k| &self.edges[k])
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &SkeletonEdge> {
        self.inc[v].iter().map(|&k| &self.edges[k])
    }

    pub fn edge_from(&self, v: usize, iv: Interval) -> Option<&SkeletonEdge> {
        self.out_edges(v).find(|e| e.interval == iv)
    }

    /// Human-readable differences in vertices and edge labels; empty when equal.
    pub fn diff(&self, other: &SkeletonGraph) -> Vec<String> {
        let mut out = Vec::new();
        if self.shape != other.shape {
            out.push(format!("shape {} vs {}", self.shape, other.shape));
            return out;
        }
        let show = |g: &SkeletonGraph, e: &SkeletonEdge| {
            format!(
                "{} -{}-> {} {} {}",
                g.vertices[e.src].compact(),
                e.interval,
                g.vertices[e.dst].compact(),
                e.cycle,
                e.kind
            )
        };
        let mine: Vec<String> = self.edges.iter().map(|e| show(self, e)).collect();
        let theirs: Vec<String> = other.edges.iter().map(|e| show(other, e)).collect();
        out.extend(mine.iter().filter(|e| !theirs.contains(e)).map(|e| format!("only left: {e}")));
        out.extend(theirs.iter().filter(|e| !mine.contains(e)).map(|e| format!("only right: {e}")));
        out
    }
}

impl EdgeView for SkeletonGraph {
    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn n(&self) -> usize {
        self.shape.size()
    }

    fn label(&self, v: usize) -> &Composition {
        &self.des[v]
    }

    fn outgoing(&self, v: usize) -> Vec<Arrow> {
        self.out_edges(v).map(arrow).collect()
    }

    fn incoming(&self, v: usize) -> Vec<Arrow> {
        self.in_edges(v).map(arrow).collect()
    }
}

fn arrow(e: &SkeletonEdge) -> Arrow {
    Arrow { src: e.src, interval: e.interval, dst: e.dst, kind: Some(e.kind) }
}
