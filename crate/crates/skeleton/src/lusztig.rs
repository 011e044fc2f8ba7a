use std::collections::BTreeSet;

use cskit_tableaux::{Interval, Tableau};

use crate::{dyck_cycle, restricted_tableau, SkeletonEdge, SkeletonError, SkeletonGraph};

/// The image of `G` under evacuation: `T ↦ evac(T)`, each edge
/// `T -I-> T′` becomes `evac(T′) -I^L-> evac(T)` with `I^L = [n+1-b, n+1-a]`,
/// increasing and decreasing swapped.
pub fn lusztig_skeleton(g: &SkeletonGraph) -> Result<SkeletonGraph, SkeletonError> {
    let n = g.shape().size();
    let evac: Vec<usize> = g
        .vertices()
        .iter()
        .map(|t| {
            let e = t.evacuate()?;
            g.id_of(&e).ok_or_else(|| SkeletonError::BadVertex(e.compact()))
        })
        .collect::<Result<_, _>>()?;
    let mut edges = Vec::with_capacity(g.edges().len());
    for e in g.edges() {
        let src = evac[e.dst];
        let interval = e.interval.reflect(n);
        let cycle = dyck_cycle(&g.vertex(src).reading_word(), interval)?;
        edges.push(SkeletonEdge { src, interval, dst: evac[e.src], cycle, kind: e.kind.opposite() });
    }
    SkeletonGraph::new(g.shape().clone(), edges)
}

/// Whether `G` equals its Lusztig image, labels and types included.
pub fn lusztig_invariance_check(g: &SkeletonGraph) -> Result<(), String> {
    let image = lusztig_skeleton(g).map_err(|e| e.to_string())?;
    if image != *g {
        return Err(image.diff(g).join("; "));
    }
    for v in 0..g.len() {
        let w = g.id_of(&g.vertex(v).evacuate().map_err(|e| e.to_string())?).expect("vertex");
        if g.des(w) != &g.des(v).rev() {
            return Err(format!("Des(evac {}) is not the reversal", g.vertex(v).compact()));
        }
    }
    Ok(())
}

fn remove_max(t: &Tableau) -> (Tableau, usize) {
    let n = t.size();
    let row = t.rows_of()[n];
    let mut rows = t.rows().to_vec();
    rows[row].pop();
    (Tableau::new(rows).expect("removing the largest entry"), row)
}

/// `σ(T) = evac_{n-1}(T ∖ n)` with `n` put back into its cell.
pub fn partial_evacuation(t: &Tableau) -> Result<Tableau, SkeletonError> {
    let n = t.size();
    let (rest, row) = remove_max(t);
    let mut rows = rest.evacuate_in(n - 1)?.rows().to_vec();
    rows.resize(rows.len().max(row + 1), Vec::new());
    rows[row].push(n);
    Ok(Tableau::new(rows)?)
}

/// `L_{n-1}` on `G_[1,n-1]`: `σ` maps the edge `T -I-> T′` with `I ⊆ [1,n-1]`
/// onto an edge `σ(T′) -I^L-> σ(T)` reflected inside `[1,n-1]`, and labels
/// `α ∖ {n}` onto their reversals.
pub fn restricted_lusztig_check(g: &SkeletonGraph) -> Result<(), String> {
    let n = g.shape().size();
    if n < 2 {
        return Ok(());
    }
    let low = Interval::new(1, n - 1);
    let sigma: Vec<usize> = g
        .vertices()
        .iter()
        .map(|t| partial_evacuation(t).map(|s| g.id_of(&s).expect("vertex")))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for (v, &s) in sigma.iter().enumerate() {
        if g.des(s).without_last() != g.des(v).without_last().rev() {
            return Err(format!("label of σ({}) is not the reversed restriction", g.vertex(v).compact()));
        }
    }
    let inside: BTreeSet<(usize, Interval, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.interval.is_subset_of(&low))
        .map(|e| (e.src, e.interval, e.dst))
        .collect();
    let image: BTreeSet<(usize, Interval, usize)> =
        inside.iter().map(|&(s, iv, d)| (sigma[d], iv.reflect(n - 1), sigma[s])).collect();
    if image != inside {
        let bad = image.difference(&inside).next().or_else(|| inside.difference(&image).next());
        return Err(format!("restricted Lusztig image differs at {bad:?}"));
    }
    Ok(())
}

/// `G_[1,n-1] ≅ G_[2,n]`: vertices of the first are keyed by `T ∖ n`, those
/// of the second by `rectify(T_[2,n])` shifted down; keyed labelled edge
/// sets and labels must coincide.
pub fn g1_gn_check(g: &SkeletonGraph) -> Result<(), String> {
    let n = g.shape().size();
    if n < 2 {
        return Ok(());
    }
    let (low, high) = (Interval::new(1, n - 1), Interval::new(2, n));
    let key_low: Vec<Tableau> = g.vertices().iter().map(|t| remove_max(t).0).collect();
    let key_high: Vec<Tableau> = g
        .vertices()
        .iter()
        .map(|t| restricted_tableau(t, high))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let distinct = |keys: &[Tableau]| keys.iter().map(Tableau::reading_word).collect::<BTreeSet<_>>().len() == keys.len();
    if !distinct(&key_low) || !distinct(&key_high) {
        return Err("vertex keys are not injective".into());
    }
    let label_low: BTreeSet<(Vec<usize>, String)> = (0..g.len())
        .map(|v| (key_low[v].reading_word(), g.des(v).without_last().to_string()))
        .collect();
    let label_high: BTreeSet<(Vec<usize>, String)> = (0..g.len())
        .map(|v| (key_high[v].reading_word(), g.des(v).without_first().to_string()))
        .collect();
    if label_low != label_high {
        return Err("vertex labels of G_[1,n-1] and G_[2,n] differ".into());
    }
    let edges = |keys: &[Tableau], iv: Interval| -> BTreeSet<(Vec<usize>, Interval, Vec<usize>)> {
        g.edges()
            .iter()
            .filter(|e| e.interval.is_subset_of(&iv))
            .map(|e| {
                let shifted = e.interval.shift_down(iv.lo - 1).expect("inside");
                (keys[e.src].reading_word(), shifted, keys[e.dst].reading_word())
            })
            .collect()
    };
    let a = edges(&key_low, low);
    let b = edges(&key_high, high);
    if a != b {
        return Err(format!("edge sets differ: {} vs {}", a.len(), b.len()));
    }
    Ok(())
}
