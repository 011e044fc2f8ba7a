use std::fmt::Write;

use cskit_skeleton::DualEquivalenceGraph;

use crate::GraphDocument;

fn vertex_name(doc: &GraphDocument, v: usize) -> String {
    let vx = &doc.vertices[v];
    let des = vx.descent_composition.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match &vx.rows {
        Some(rows) => {
            let sep = if doc.n > 9 { "," } else { "" };
            let rows: Vec<String> =
                rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)).collect();
            format!("{}\\n({des})", rows.join("/"))
        }
        None => format!("{v}\\n({des})"),
    }
}

fn title(doc: &GraphDocument) -> String {
    match &doc.shape {
        Some(s) => format!("CS({})", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
        None => format!("G_{}", doc.n),
    }
}

/// A directed graph with one node per vertex and edges labelled
/// `I=[a,b] (cycle) type`. The text depends only on the document.
pub fn to_dot(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", title(doc)).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for v in 0..doc.vertices.len() {
        writeln!(out, "  v{v} [label=\"{}\"];", vertex_name(doc, v)).unwrap();
    }
    for e in &doc.edges {
        let mut label = format!("I=[{},{}]", e.interval[0], e.interval[1]);
        if !e.cycle.is_empty() {
            let c: String = e.cycle.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(if doc.n > 9 { " " } else { "" });
            write!(label, " ({c})").unwrap();
        }
        write!(label, " {}", e.kind.as_deref().unwrap_or("UNTYPED")).unwrap();
        writeln!(out, "  v{} -> v{} [label=\"{label}\"];", e.src, e.dst).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The undirected dual equivalence graph, edges labelled by `i`.
pub fn de_to_dot(g: &DualEquivalenceGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{title}\" {{").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (v, t) in g.vertices.iter().enumerate() {
        writeln!(out, "  v{v} [label=\"{}\"];", t.compact()).unwrap();
    }
    for &(u, v, i) in &g.edges {
        writeln!(out, "  v{u} -- v{v} [label=\"{i}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
