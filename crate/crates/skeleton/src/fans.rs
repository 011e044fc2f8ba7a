use cskit_tableaux::{Composition, Interval};

use crate::{top_label, Arrow, EdgeKind, EdgeView};

/// The edges forced around an increasing edge (out-fan) or a decreasing edge (in-fan).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub outgoing: bool,
    /// The common source of an out-fan, or the common target of an in-fan.
    pub center: usize,
    pub i: usize,
    pub m: usize,
    /// `w_1, …, w_m` for an out-fan, `v_1, …, v_m` for an in-fan.
    pub members: Vec<usize>,
}

fn has_kind(a: &Arrow, kind: EdgeKind) -> bool {
    a.kind == Some(kind)
}

/// `I_k = [i+k-1, i+2m-k+1]`.
fn fan_interval(i: usize, m: usize, k: usize) -> Interval {
    Interval::new(i + k - 1, i + 2 * m - k + 1)
}

/// The out-fan of an increasing edge `v -I-> w`: edges `v -I_k-> w_k`, all
/// increasing, with `I_k = [i+k-1, i+2m-k+1]`; `w_k -J_k-> w_{k+1}`
/// preserving for `k < m` with `J_k = [i+2m-k, i+2m-k+2]`; and `w_m -J_m-> v`
/// decreasing. The given edge may be any `I_k`; the shortest fan wins.
pub fn out_fan<G: EdgeView>(g: &G, a: &Arrow) -> Result<Fan, String> {
    let (lo, h) = (a.interval.lo, a.interval.half());
    let mut first = None;
    for t in 0..lo {
        if a.interval.hi + t > g.n() {
            break;
        }
        match out_fan_at(g, a.src, lo - t, h + t) {
            Ok(fan) if fan.members[t] == a.dst => return Ok(fan),
            Ok(_) => {}
            Err(e) => {
                first.get_or_insert(e);
            }
        }
    }
    Err(first.unwrap_or_else(|| format!("out-fan of {} via {}: no fan contains the edge", a.src, a.interval)))
}

fn out_fan_at<G: EdgeView>(g: &G, v: usize, i: usize, m: usize) -> Result<Fan, String> {
    let j = |k: usize| Interval::new(i + 2 * m - k, i + 2 * m - k + 2);
    let outer = fan_interval(i, m, 1);
    let mut members = Vec::with_capacity(m);
    for k in 1..=m {
        let e = g
            .arrow_from(v, fan_interval(i, m, k))
            .filter(|e| has_kind(e, EdgeKind::Increasing))
            .ok_or_else(|| format!("out-fan of {v} via {outer}: no increasing edge {}", fan_interval(i, m, k)))?;
        members.push(e.dst);
    }
    for k in 1..=m {
        let (from, to, kind) = if k < m {
            (members[k - 1], members[k], EdgeKind::Preserving)
        } else {
            (members[m - 1], v, EdgeKind::Decreasing)
        };
        if !g.arrow_between(from, j(k), to).is_some_and(|e| has_kind(&e, kind)) {
            return Err(format!("out-fan of {v} via {outer}: missing {kind} edge {from} -{}-> {to}", j(k)));
        }
    }
    Ok(Fan { outgoing: true, center: v, i, m, members })
}

/// The in-fan of a decreasing edge `v -I-> w`: edges `v_k -I_k-> w`, all
/// decreasing; `v_{k+1} -J_k-> v_k` preserving for `k < m` with
/// `J_k = [i+k-2, i+k]`; and `w -J_m-> v_m` increasing. The given edge may
/// be any `I_k`.
pub fn in_fan<G: EdgeView>(g: &G, a: &Arrow) -> Result<Fan, String> {
    if !has_kind(a, EdgeKind::Decreasing) {
        return Err(format!("in-fan into {}: edge via {} is not decreasing", a.dst, a.interval));
    }
    let (lo, h) = (a.interval.lo, a.interval.half());
    for t in 0..lo.saturating_sub(1) {
        if a.interval.hi + t > g.n() {
            break;
        }
        let mut members = Vec::new();
        if in_fan_search(g, a, lo - t, h + t, t, &mut members) {
            return Ok(Fan { outgoing: false, center: a.dst, i: lo - t, m: h + t, members });
        }
    }
    Err(format!("in-fan into {} via {}: no fan contains the edge", a.dst, a.interval))
}

/// Depth-first search for `v_1, …, v_m`, with `v_{t+1}` fixed to the source of `a`.
fn in_fan_search<G: EdgeView>(g: &G, a: &Arrow, i: usize, m: usize, t: usize, members: &mut Vec<usize>) -> bool {
    let w = a.dst;
    let k = members.len() + 1;
    if k > m {
        let last = members[m - 1];
        return g
            .arrow_between(w, Interval::new(i + m - 2, i + m), last)
            .is_some_and(|e| has_kind(&e, EdgeKind::Increasing));
    }
    let candidates: Vec<usize> = g
        .incoming(w)
        .into_iter()
        .filter(|e| e.interval == fan_interval(i, m, k) && has_kind(e, EdgeKind::Decreasing))
        .filter(|e| k != t + 1 || e.src == a.src)
        .filter(|e| {
            k == 1
                || g.arrow_between(e.src, Interval::new(i + k - 3, i + k - 1), members[k - 2])
                    .is_some_and(|x| has_kind(&x, EdgeKind::Preserving))
        })
        .map(|e| e.src)
        .collect();
    for u in candidates {
        members.push(u);
        if in_fan_search(g, a, i, m, t, members) {
            return true;
        }
        members.pop();
    }
    false
}

/// Checks the out-fan of every increasing edge and the in-fan of every
/// decreasing edge; returns how many fans were found.
pub fn fan_check<G: EdgeView>(g: &G) -> Result<usize, String> {
    let mut count = 0;
    for a in g.arrows() {
        match a.kind {
            Some(EdgeKind::Increasing) => {
                out_fan(g, &a)?;
                count += 1;
            }
            Some(EdgeKind::Decreasing) => {
                in_fan(g, &a)?;
                count += 1;
            }
            _ => {}
        }
    }
    Ok(count)
}

/// Every vertex not labelled `λ` has an incoming preserving or increasing
/// edge; every vertex not labelled `rev(λ)` has an outgoing preserving or
/// decreasing edge.
pub fn in_out_edge_check<G: EdgeView>(g: &G) -> Result<(), String> {
    let Some(lambda) = top_label(g) else {
        return Err("no label dominates all others".into());
    };
    let lambda = Composition::new(lambda.parts().to_vec()).expect("partition parts are positive");
    for v in 0..g.vertex_count() {
        let alpha = g.label(v);
        let ok_in = g
            .incoming(v)
            .iter()
            .any(|e| has_kind(e, EdgeKind::Preserving) || has_kind(e, EdgeKind::Increasing));
        if *alpha != lambda && !ok_in {
            return Err(format!("vertex {v} labelled {alpha} has no preserving or increasing incoming edge"));
        }
        let ok_out = g
            .outgoing(v)
            .iter()
            .any(|e| has_kind(e, EdgeKind::Preserving) || has_kind(e, EdgeKind::Decreasing));
        if alpha.rev() != lambda && !ok_out {
            return Err(format!("vertex {v} labelled {alpha} has no preserving or decreasing outgoing edge"));
        }
    }
    Ok(())
}
