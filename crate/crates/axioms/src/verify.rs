use std::collections::BTreeSet;

use cskit_skeleton::{in_out_edge_check, out_fan, placement, top_label, top_subcrystal, Arrow, EdgeKind, EdgeView};
use cskit_tableaux::{Composition, Interval, Partition};
use petgraph::unionfind::UnionFind;

use crate::{commutation_case, isomorphic, AxiomError, outgoing_pairs, AxiomReport, LabeledGraph, System};

fn edge_name(g: &LabeledGraph, a: &Arrow) -> String {
    format!("{} {} -{}-> {} {}", a.src, g.label(a.src), a.interval, a.dst, g.label(a.dst))
}

fn vertex_name(g: &LabeledGraph, v: usize) -> String {
    format!("{v} {}", g.label(v))
}

/// Intervals `I` with `I⁻ ∪ {k} ⊆ α^(j)` and `I⁺ ⊆ α^(j+1)` for some `j`.
fn outgoing_candidates(alpha: &Composition) -> Vec<Interval> {
    let mut out = Vec::new();
    for j in 0..alpha.len().saturating_sub(1) {
        let (a, b) = (alpha.block(j), alpha.block(j + 1));
        let k = a.hi;
        for m in 1..=(a.len() - 1).min(b.len()) {
            out.push(Interval::new(k - m, k + m));
        }
    }
    out
}

/// Intervals `I` with `I⁻ ⊆ β^(j)` and `I⁺ ∪ {k} ⊆ β^(j+1)` for some `j`.
fn incoming_candidates(beta: &Composition) -> Vec<Interval> {
    let mut out = Vec::new();
    for j in 0..beta.len().saturating_sub(1) {
        let (a, b) = (beta.block(j), beta.block(j + 1));
        let k = b.lo;
        for m in 1..=a.len().min(b.len() - 1) {
            out.push(Interval::new(k - m, k + m));
        }
    }
    out
}

/// Block `j` with `I⁻ ⊆ β^(j)` and `I⁺ ∪ {k} ⊆ β^(j+1)`.
fn incoming_placement(beta: &Composition, iv: Interval) -> Option<usize> {
    let k = iv.mid();
    let j = beta.block_of(k.checked_sub(1)?)?;
    if j + 1 >= beta.len() {
        return None;
    }
    (beta.block(j).contains(iv.lo) && beta.block(j + 1).contains(k) && beta.block(j + 1).contains(iv.hi)).then_some(j)
}

/// The labels `α` an edge labelled `I` may come from when it ends at `β`,
/// one per applicable type.
pub fn source_labels(beta: &Composition, iv: Interval) -> Vec<(EdgeKind, Composition)> {
    let Some(j) = incoming_placement(beta, iv) else {
        return Vec::new();
    };
    let k = iv.mid();
    let lower: Vec<usize> = (iv.lo..k).collect();
    let upper: Vec<usize> = (k + 1..=iv.hi).collect();
    let blocks = beta.block_sets();
    let mut out = Vec::new();

    let mut pres = blocks.clone();
    pres[j].push(k);
    pres[j + 1].retain(|&x| x != k);
    out.push((EdgeKind::Preserving, pres));

    if blocks[j + 1] == (k..=iv.hi).collect::<Vec<_>>() {
        let mut inc = blocks.clone();
        inc[j].push(k);
        let mut merged = upper.clone();
        if j + 2 < blocks.len() {
            merged.extend(&blocks[j + 2]);
            inc.remove(j + 2);
        }
        inc[j + 1] = merged;
        out.push((EdgeKind::Increasing, inc));
    }

    let mut dec = blocks.clone();
    dec[j].retain(|x| !lower.contains(x));
    dec[j + 1].retain(|&x| x != k);
    let mut middle = lower;
    middle.push(k);
    dec.insert(j + 1, middle);
    out.push((EdgeKind::Decreasing, dec));

    out.into_iter()
        .map(|(kind, b)| (kind, Composition::from_blocks(&b).expect("blocks stay consecutive")))
        .collect()
}

fn check_connected(g: &LabeledGraph) -> Result<(), String> {
    let comps = g.components();
    if comps.len() == 1 {
        Ok(())
    } else {
        Err(format!("{} weak components; vertex {} is not reachable from 0", comps.len(), comps[1].0[0]))
    }
}

fn check_interval_shape(g: &LabeledGraph, a: &Arrow) -> Result<(), String> {
    if a.interval.len() < 3 || !a.interval.is_odd() {
        return Err(format!("{}: interval is not [k-m, k+m] with m > 0", edge_name(g, a)));
    }
    Ok(())
}

fn check_a0(g: &LabeledGraph) -> Result<(), String> {
    for a in g.edges() {
        check_interval_shape(g, a)?;
        if placement(g.label(a.src), a.interval).is_none() {
            return Err(format!("{}: I⁻ ∪ {{k}} and I⁺ do not sit in consecutive blocks of the source", edge_name(g, a)));
        }
    }
    Ok(())
}

fn check_a0_dual(g: &LabeledGraph) -> Result<(), String> {
    for a in g.edges() {
        check_interval_shape(g, a)?;
        if incoming_placement(g.label(a.dst), a.interval).is_none() {
            return Err(format!("{}: I⁻ and {{k}} ∪ I⁺ do not sit in consecutive blocks of the target", edge_name(g, a)));
        }
    }
    Ok(())
}

/// Either exactly one outgoing edge labelled `I`, or an incoming edge
/// labelled `J ⊆ I` from a label dominating `α`, but not both. Dominance is
/// weak; places where strict dominance would decide otherwise become notes.
fn check_a1(g: &LabeledGraph, notes: &mut Vec<String>) -> Result<(), String> {
    for v in 0..g.len() {
        let alpha = g.label(v);
        let incoming = g.incoming(v);
        for iv in outgoing_candidates(alpha) {
            let outs = g.outgoing(v).iter().filter(|a| a.interval == iv).count();
            let alt = |strict: bool| {
                incoming.iter().any(|a| {
                    let gamma = g.label(a.src);
                    a.interval.is_subset_of(&iv) && if strict { gamma.strictly_dominates(alpha) } else { gamma.dominates(alpha) }
                })
            };
            let weak = (outs == 1) != alt(false);
            if weak != ((outs == 1) != alt(true)) {
                notes.push(format!("A1 at vertex {} for {iv}: weak and strict dominance disagree", vertex_name(g, v)));
            }
            if !weak {
                return Err(format!(
                    "vertex {} and {iv}: {outs} outgoing edges labelled I, incoming J ⊆ I from a dominating label: {}",
                    vertex_name(g, v),
                    alt(false)
                ));
            }
        }
    }
    Ok(())
}

/// Either exactly one incoming edge labelled `I`, or an outgoing edge
/// labelled `J ⊆ I` to a label `γ` with `rev(γ)` dominating `rev(β)`, but
/// not both. This is the outgoing-edge clause read through `L_n`.
fn check_a1_dual(g: &LabeledGraph) -> Result<(), String> {
    for w in 0..g.len() {
        let beta = g.label(w);
        let outgoing = g.outgoing(w);
        for iv in incoming_candidates(beta) {
            let ins = g.incoming(w).iter().filter(|a| a.interval == iv).count();
            let alt = outgoing
                .iter()
                .any(|a| a.interval.is_subset_of(&iv) && g.label(a.dst).rev().dominates(&beta.rev()));
            if (ins == 1) == alt {
                return Err(format!(
                    "vertex {} and {iv}: {ins} incoming edges labelled I, outgoing J ⊆ I to a label dominating it after reversal: {alt}",
                    vertex_name(g, w)
                ));
            }
        }
    }
    Ok(())
}

fn check_a2(g: &LabeledGraph) -> Result<(), String> {
    match g.edges().iter().find(|a| a.kind.is_none()) {
        Some(a) => Err(format!("{}: target label fits none of the three forms", edge_name(g, a))),
        None => Ok(()),
    }
}

fn check_a2_dual(g: &LabeledGraph) -> Result<(), String> {
    for a in g.edges() {
        if !source_labels(g.label(a.dst), a.interval).iter().any(|(_, alpha)| alpha == g.label(a.src)) {
            return Err(format!("{}: source label fits none of the three forms", edge_name(g, a)));
        }
    }
    Ok(())
}

fn check_a3(g: &LabeledGraph) -> Result<(), String> {
    for a in g.edges().iter().filter(|a| a.kind == Some(EdgeKind::Increasing)) {
        out_fan(g, a)?;
    }
    Ok(())
}

fn check_lusztig(g: &LabeledGraph) -> Result<(), String> {
    if isomorphic(&g.lusztig(), g) {
        Ok(())
    } else {
        Err(format!("L_{}(G) is not isomorphic to G", g.n()))
    }
}

fn check_a4(g: &LabeledGraph) -> Result<(), String> {
    check_lusztig(g)?;
    if let Some(b) = g.branch_last() {
        if !isomorphic(&b.lusztig(), &b) {
            return Err(format!("L_{}(G_[1,{}]) is not isomorphic to G_[1,{}]", b.n(), b.n(), b.n()));
        }
    }
    Ok(())
}

fn check_a5(g: &LabeledGraph) -> Result<(), String> {
    top_subcrystal(g).map(|_| ())
}

fn both(first: Result<(), String>, second: impl FnOnce() -> Result<(), String>) -> Result<(), String> {
    first.and_then(|()| second())
}

/// The GL_n axioms A0–A5, preceded by a connectivity check.
pub fn verify_gl(g: &LabeledGraph) -> AxiomReport {
    let mut r = AxiomReport::new(System::Gl);
    r.record("connected", check_connected(g));
    r.record("A0", check_a0(g));
    let mut notes = Vec::new();
    r.record("A1", check_a1(g, &mut notes));
    r.notes.extend(notes);
    r.record("A2", check_a2(g));
    r.record("A3", check_a3(g));
    r.record("A4", check_a4(g));
    r.record("A5", check_a5(g));
    r
}

/// The S_n axioms S0–S6, preceded by a connectivity check. S5 recurses into
/// every component of `G_[1,n-1]`.
pub fn verify_sn(g: &LabeledGraph) -> AxiomReport {
    let mut r = AxiomReport::new(System::Sn);
    r.record("connected", check_connected(g));
    r.record("S0", check_a0(g));
    let mut notes = Vec::new();
    r.record("S1", check_a1(g, &mut notes));
    r.notes.extend(notes);
    r.record("S2", check_a2(g));
    r.record("S3", check_a3(g));
    r.record("S4", check_lusztig(g));
    r.record("S5", check_s5(g));
    r.record("S6", check_s6(g));
    r
}

/// The local axioms L0–L5, preceded by a connectivity check.
pub fn verify_local(g: &LabeledGraph) -> AxiomReport {
    let mut r = AxiomReport::new(System::Local);
    r.record("connected", check_connected(g));
    r.record("L0", both(check_a0(g), || check_a0_dual(g)));
    let mut notes = Vec::new();
    r.record("L1", both(check_a1(g, &mut notes), || check_a1_dual(g)));
    r.notes.extend(notes);
    r.record("L2", both(check_a2(g), || check_a2_dual(g)));
    r.record("L3", check_l3(g));
    r.record("L4", check_l4(g));
    r.record("L5", in_out_edge_check(g));
    r
}

fn top_as_composition(g: &LabeledGraph) -> Result<(Partition, Composition), String> {
    let lambda = top_label(g).ok_or("no label dominates all others")?;
    let comp = Composition::new(lambda.parts().to_vec()).map_err(|e| e.to_string())?;
    Ok((lambda, comp))
}

fn check_s5(g: &LabeledGraph) -> Result<(), String> {
    let Some(b) = g.branch_last() else {
        return Ok(());
    };
    let (lambda, _) = top_as_composition(g)?;
    let mut expected: Vec<Partition> = lambda.minus_one_box().into_iter().map(|(_, p)| p).collect();
    expected.sort();
    let mut tops = Vec::new();
    for (vs, comp) in b.components() {
        let report = verify_sn(&comp);
        if let Some(f) = report.failures().next() {
            return Err(format!(
                "component of G_[1,{}] on vertices {vs:?} fails {}: {}",
                b.n(),
                f.axiom,
                f.witness.as_deref().unwrap_or_default()
            ));
        }
        tops.push(top_label(&comp).ok_or_else(|| format!("component on vertices {vs:?} has no top label"))?);
    }
    tops.sort();
    if tops != expected {
        let show = |ps: &[Partition]| ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ");
        return Err(format!("components of G_[1,{}] have tops {} but {lambda} branches to {}", b.n(), show(&tops), show(&expected)));
    }
    Ok(())
}

/// The preserving edge out of `v` whose interval straddles blocks `j` and
/// `j+1` (0-based), if there is exactly one.
fn f_edge(g: &LabeledGraph, v: usize, j: usize) -> Result<Arrow, String> {
    let found: Vec<Arrow> = g
        .outgoing(v)
        .into_iter()
        .filter(|a| a.kind == Some(EdgeKind::Preserving) && placement(g.label(v), a.interval) == Some(j))
        .collect();
    match found[..] {
        [a] => Ok(a),
        [] => Err(format!("no f_{} edge out of vertex {}", j + 1, vertex_name(g, v))),
        _ => Err(format!("{} f_{} edges out of vertex {}", found.len(), j + 1, vertex_name(g, v))),
    }
}

fn check_s6(g: &LabeledGraph) -> Result<(), String> {
    let (lambda, top) = top_as_composition(g)?;
    let tops: Vec<usize> = (0..g.len()).filter(|&v| *g.label(v) == top).collect();
    let [u] = tops[..] else {
        return Err(format!("{} vertices carry the label {lambda}", tops.len()));
    };
    let Some(b) = g.branch_last() else {
        return Ok(());
    };
    let s = lambda.len();
    let mut uf = UnionFind::new(g.len());
    for a in b.edges() {
        uf.union(a.src, a.dst);
    }
    for (r, minus) in lambda.minus_one_box() {
        let mut cur = u;
        for j in r..s - 1 {
            let a = f_edge(g, cur, j).map_err(|e| format!("path towards {minus}: {e}"))?;
            uf.union(a.src, a.dst);
            cur = a.dst;
        }
        let mut want = lambda.parts().to_vec();
        want[r] -= 1;
        want[s - 1] += 1;
        if g.label(cur).parts() != want {
            return Err(format!("path towards {minus} ends at vertex {}, expected label {want:?}", vertex_name(g, cur)));
        }
    }
    let roots: BTreeSet<usize> = (0..g.len()).map(|v| uf.find(v)).collect();
    if roots.len() > 1 {
        return Err(format!("G_[1,{}] with the f-paths has {} components", b.n(), roots.len()));
    }
    Ok(())
}

/// The 2-cycles around `|I| = 3` edges, then commutation configurations for
/// outgoing pairs and for incoming pairs (as outgoing pairs of `L_n(G)`).
/// Pairs no case speaks about are skipped.
fn check_l3(g: &LabeledGraph) -> Result<(), String> {
    for a in g.edges().iter().filter(|a| a.interval.len() == 3) {
        let (back, kind) = match a.kind {
            Some(EdgeKind::Increasing) => (a.interval.shift_up(1), "increasing"),
            Some(EdgeKind::Decreasing) => match a.interval.shift_down(1) {
                Some(x) => (x, "decreasing"),
                None => return Err(format!("{}: decreasing edge with no interval below it", edge_name(g, a))),
            },
            _ => continue,
        };
        if back.hi > g.n() || g.arrow_between(a.dst, back, a.src).is_none() {
            return Err(format!("{kind} edge {} has no return edge labelled {back}", edge_name(g, a)));
        }
    }
    let dual = g.lusztig();
    for (h, side) in [(g, "outgoing"), (&dual, "incoming")] {
        for v in 0..h.len() {
            for (x, y) in outgoing_pairs(h, v) {
                let outcome = match commutation_case(h, v, x, y) {
                    Err(AxiomError::Uncovered { .. }) => continue,
                    other => other,
                };
                if !matches!(outcome, Ok(Some(_))) {
                    let (x, y) = if side == "outgoing" { (x, y) } else { (x.reflect(g.n()), y.reflect(g.n())) };
                    return Err(format!("{side} edges {x} and {y} at vertex {} match no commutation case", vertex_name(g, v)));
                }
            }
        }
    }
    Ok(())
}

/// Strings through each edge of `G_s`: from the source, `φ_j` preserving
/// edges with intervals sliding left; into the target, `ε_j` preserving
/// edges with intervals sliding right.
fn check_l4(g: &LabeledGraph) -> Result<(), String> {
    let Some(s) = (0..g.len()).map(|v| g.label(v).len()).min() else {
        return Ok(());
    };
    let in_top = |v: usize| g.label(v).len() == s;
    for a in g.edges().iter().filter(|a| in_top(a.src) && in_top(a.dst)) {
        let (i, hi) = (a.interval.lo, a.interval.hi);
        let alpha = g.label(a.src);
        let Some(j) = placement(alpha, a.interval) else {
            return Err(format!("{}: interval straddles no two blocks", edge_name(g, a)));
        };
        let phi = i + 1 - alpha.block(j).lo;
        let mut cur = a.src;
        for k in 0..phi {
            let step = Interval::new(i - k, hi - k);
            match g.arrow_from(cur, step) {
                Some(e) if e.kind == Some(EdgeKind::Preserving) => cur = e.dst,
                _ => return Err(format!("f-string from {}: no preserving edge {step} out of vertex {cur}", edge_name(g, a))),
            }
        }
        let beta = g.label(a.dst);
        let Some(jb) = incoming_placement(beta, a.interval) else {
            return Err(format!("{}: interval straddles no two blocks of the target", edge_name(g, a)));
        };
        let eps = beta.block(jb + 1).hi + 1 - hi;
        let mut cur = a.dst;
        for k in 0..eps {
            let step = Interval::new(i + k, hi + k);
            match g.incoming(cur).into_iter().find(|e| e.interval == step && e.kind == Some(EdgeKind::Preserving)) {
                Some(e) => cur = e.src,
                None => return Err(format!("e-string into {}: no preserving edge {step} into vertex {cur}", edge_name(g, a))),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn candidates_follow_block_boundaries() {
        assert_eq!(outgoing_candidates(&c(&[3, 2, 1])), vec![Interval::new(2, 4), Interval::new(1, 5), Interval::new(4, 6)]);
        assert_eq!(incoming_candidates(&c(&[1, 3, 2])), vec![Interval::new(1, 3), Interval::new(4, 6)]);
    }

    #[test]
    fn source_labels_invert_the_three_forms() {
        // (3,2,1) -[4,6]-> (3,1,2) is preserving.
        let got = source_labels(&c(&[3, 1, 2]), Interval::new(4, 6));
        assert!(got.contains(&(EdgeKind::Preserving, c(&[3, 2, 1]))));
        let beta = cskit_skeleton::descent_transition(&c(&[1, 3, 2]), Interval::new(2, 6), EdgeKind::Decreasing).unwrap();
        assert_eq!(beta, c(&[3, 3]));
        let got = source_labels(&beta, Interval::new(2, 6));
        assert!(got.contains(&(EdgeKind::Decreasing, c(&[1, 3, 2]))));
        let beta = cskit_skeleton::descent_transition(&c(&[2, 3, 1]), Interval::new(1, 3), EdgeKind::Increasing).unwrap();
        assert_eq!(beta, c(&[1, 2, 2, 1]));
        assert!(source_labels(&beta, Interval::new(1, 3)).contains(&(EdgeKind::Increasing, c(&[2, 3, 1]))));
    }
}
