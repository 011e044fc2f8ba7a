use cskit_axioms::LabeledGraph;
use cskit_crystal::Cycle;
use cskit_skeleton::{EdgeKind, SkeletonEdge, SkeletonGraph};
use cskit_tableaux::{Composition, Interval, Partition, Tableau};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// The JSON form of a skeleton, or of an abstract labelled graph when the
/// vertices carry no rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<Vec<usize>>,
    pub n: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    /// Bottom row first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<usize>>>,
    pub descent_composition: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub src: usize,
    pub dst: usize,
    pub interval: [usize; 2],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cycle: Vec<usize>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

impl GraphDocument {
    pub fn from_skeleton(g: &SkeletonGraph) -> Self {
        let vertices = (0..g.len())
            .map(|id| VertexDoc {
                id,
                rows: Some(g.vertex(id).rows().to_vec()),
                descent_composition: g.des(id).parts().to_vec(),
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                src: e.src,
                dst: e.dst,
                interval: [e.interval.lo, e.interval.hi],
                cycle: e.cycle.values().to_vec(),
                kind: Some(e.kind.to_string()),
            })
            .collect();
        GraphDocument { schema: SCHEMA_VERSION, shape: Some(g.shape().parts().to_vec()), n: g.shape().size(), vertices, edges }
    }

    /// Edge types are the inferred ones; an edge no type fits has none.
    pub fn from_labeled(g: &LabeledGraph) -> Self {
        let vertices = g
            .labels()
            .iter()
            .enumerate()
            .map(|(id, a)| VertexDoc { id, rows: None, descent_composition: a.parts().to_vec() })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|a| EdgeDoc {
                src: a.src,
                dst: a.dst,
                interval: [a.interval.lo, a.interval.hi],
                cycle: Vec::new(),
                kind: a.kind.map(|k| k.to_string()),
            })
            .collect();
        GraphDocument { schema: SCHEMA_VERSION, shape: None, n: g.n(), vertices, edges }
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        let doc: GraphDocument = serde_json::from_str(s).map_err(|e| invalid(format!("JSON error: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.schema != SCHEMA_VERSION {
            return Err(invalid(format!("unsupported schema version {}", self.schema)));
        }
        for (k, v) in self.vertices.iter().enumerate() {
            if v.id != k {
                return Err(invalid(format!("vertices[{k}] has id {}; ids must be 0..{} in order", v.id, self.vertices.len())));
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.src >= self.vertices.len() || e.dst >= self.vertices.len() {
                return Err(invalid(format!("edges[{k}] joins {} and {} but there are {} vertices", e.src, e.dst, self.vertices.len())));
            }
            if e.interval[0] < 1 || e.interval[0] > e.interval[1] || e.interval[1] > self.n {
                return Err(invalid(format!("edges[{k}] has interval {:?} outside [1,{}]", e.interval, self.n)));
            }
        }
        Ok(())
    }

    fn interval(e: &EdgeDoc) -> Interval {
        Interval::new(e.interval[0], e.interval[1])
    }

    pub fn to_labeled(&self) -> Result<LabeledGraph, CliError> {
        let labels = self
            .vertices
            .iter()
            .map(|v| Composition::new(v.descent_composition.clone()).map_err(|e| invalid(format!("vertex {}: {e}", v.id))))
            .collect::<Result<Vec<_>, _>>()?;
        let edges: Vec<_> = self.edges.iter().map(|e| (e.src, e.dst, Self::interval(e))).collect();
        LabeledGraph::new(self.n, labels, &edges).map_err(|e| invalid(e.to_string()))
    }

    /// Needs a shape, rows on every vertex, and a cycle and type on every edge.
    pub fn to_skeleton(&self) -> Result<SkeletonGraph, CliError> {
        let shape = self.shape.clone().ok_or_else(|| invalid("document has no shape"))?;
        let shape = Partition::new(shape).map_err(|e| invalid(e.to_string()))?;
        let canon = SkeletonGraph::new(shape.clone(), Vec::new()).map_err(|e| invalid(e.to_string()))?;
        if canon.len() != self.vertices.len() {
            return Err(invalid(format!("shape {shape} has {} tableaux but the document lists {}", canon.len(), self.vertices.len())));
        }
        let ids = self
            .vertices
            .iter()
            .map(|v| {
                let rows = v.rows.clone().ok_or_else(|| invalid(format!("vertex {} has no rows", v.id)))?;
                let t = Tableau::new(rows).map_err(|e| invalid(format!("vertex {}: {e}", v.id)))?;
                let id = canon.id_of(&t).ok_or_else(|| invalid(format!("vertex {} is not a standard tableau of shape {shape}", v.id)))?;
                if canon.des(id).parts() != v.descent_composition.as_slice() {
                    return Err(invalid(format!("vertex {} has the wrong descent composition", v.id)));
                }
                Ok(id)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let c = &e.cycle;
                let consecutive = !c.is_empty() && c.windows(2).all(|w| w[0] == w[1] + 1) && c[c.len() - 1] >= 1;
                if !consecutive {
                    return Err(invalid(format!("edges[{k}] cycle {c:?} is not a descending run")));
                }
                let kind: EdgeKind = e.kind.as_deref().ok_or_else(|| invalid(format!("edges[{k}] has no type")))?.parse().map_err(invalid)?;
                Ok(SkeletonEdge {
                    src: ids[e.src],
                    interval: Self::interval(e),
                    dst: ids[e.dst],
                    cycle: Cycle::descending(c[0], c[c.len() - 1]),
                    kind,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        SkeletonGraph::new(shape, edges).map_err(|e| invalid(e.to_string()))
    }
}
