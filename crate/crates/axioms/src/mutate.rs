use std::fmt;

use cskit_tableaux::Interval;

use crate::{AxiomError, LabeledGraph};

/// A single local corruption of a labelled graph. Edge indices refer to
/// [`LabeledGraph::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    DeleteEdge(usize),
    /// Moves both ends of the interval by the offset.
    ShiftInterval(usize, isize),
    /// Widens the interval by one letter on each side.
    WidenInterval(usize),
    SwapLabels(usize, usize),
    FlipEdge(usize),
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutation::DeleteEdge(e) => write!(f, "delete edge {e}"),
            Mutation::ShiftInterval(e, d) => write!(f, "shift edge {e} by {d:+}"),
            Mutation::WidenInterval(e) => write!(f, "widen edge {e} by 2"),
            Mutation::SwapLabels(a, b) => write!(f, "swap labels of {a} and {b}"),
            Mutation::FlipEdge(e) => write!(f, "flip edge {e}"),
        }
    }
}

impl LabeledGraph {
    /// Applies `m`, failing when the result is not a valid labelled graph
    /// (an interval leaving `[1, n]`, an unknown edge or vertex).
    pub fn mutated(&self, m: Mutation) -> Result<LabeledGraph, AxiomError> {
        let bad = || AxiomError::BadMutation(m.to_string());
        let mut labels = self.labels().to_vec();
        let mut edges = self.edge_triples();
        let moved = |e: usize, dlo: isize, dhi: isize| -> Result<(usize, usize, Interval), AxiomError> {
            let &(s, t, x) = edges.get(e).ok_or_else(bad)?;
            let x = x.adjust(dlo, dhi).filter(|x| x.hi <= self.n()).ok_or_else(bad)?;
            Ok((s, t, x))
        };
        match m {
            Mutation::DeleteEdge(e) => {
                moved(e, 0, 0)?;
                edges.remove(e);
            }
            Mutation::ShiftInterval(e, d) => edges[e] = moved(e, d, d)?,
            Mutation::WidenInterval(e) => edges[e] = moved(e, -1, 1)?,
            Mutation::SwapLabels(a, b) => {
                if a.max(b) >= self.len() {
                    return Err(bad());
                }
                labels.swap(a, b);
            }
            Mutation::FlipEdge(e) => {
                let (s, t, x) = moved(e, 0, 0)?;
                edges[e] = (t, s, x);
            }
        }
        LabeledGraph::new(self.n(), labels, &edges)
    }
}

/// Twelve deterministic mutations: three each of edge deletion, interval
/// shift, label swap and direction flip, spread over the edge list.
/// Shifts move right when room allows, else left; swaps only pair vertices
/// with different labels. Fewer are returned for graphs too small to host them.
pub fn mutation_suite(g: &LabeledGraph) -> Vec<Mutation> {
    let e = g.edges().len();
    let picks: Vec<usize> = if e == 0 {
        Vec::new()
    } else {
        let mut p = vec![0, e / 2, e - 1];
        p.dedup();
        p
    };
    let mut out = Vec::new();
    out.extend(picks.iter().map(|&k| Mutation::DeleteEdge(k)));
    out.extend(picks.iter().map(|&k| {
        let d = if g.edges()[k].interval.hi < g.n() { 1 } else { -1 };
        Mutation::ShiftInterval(k, d)
    }));
    let v = g.len();
    let mut swaps = Vec::new();
    'outer: for gap in [v / 2, v / 3, 1] {
        for a in 0..v {
            let b = a + gap.max(1);
            if b < v && g.labels()[a] != g.labels()[b] && !swaps.contains(&Mutation::SwapLabels(a, b)) {
                swaps.push(Mutation::SwapLabels(a, b));
                if swaps.len() == 3 {
                    break 'outer;
                }
                continue 'outer;
            }
        }
    }
    out.extend(swaps);
    out.extend(picks.iter().map(|&k| Mutation::FlipEdge(k)));
    out
}
