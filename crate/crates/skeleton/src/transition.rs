use cskit_crystal::Cycle;
use cskit_tableaux::{Composition, Interval, Tableau};

use crate::{dyck_cycle, is_dyck_interval, EdgeKind, SkeletonError};

/// Whether `shape(jdt(T_[lo,hi]))` is a two-row rectangle `(h, h)`.
///
/// Test intervals reaching outside `[1, n]` count as rectangle-free.
pub fn has_rectangle(t: &Tableau, lo: usize, hi: usize) -> bool {
    let n = t.size();
    if lo < 1 || hi > n || lo > hi || (hi - lo + 1) % 2 == 1 {
        return false;
    }
    let h = (hi - lo).div_ceil(2);
    match t.restrict(Interval::new(lo, hi)) {
        Ok(r) => r.rectify().shape().parts() == [h, h],
        Err(_) => false,
    }
}

fn require_dyck(t: &Tableau, iv: Interval) -> Result<Vec<usize>, SkeletonError> {
    if !t.is_standard() {
        return Err(SkeletonError::NotStandard);
    }
    let pi = t.reading_word();
    if !is_dyck_interval(&pi, iv)? {
        return Err(SkeletonError::NotDyck { interval: iv, word: pi });
    }
    Ok(pi)
}

/// Type of the edge out of `T` labelled `I = [i, i+2m]`: increasing on a
/// rectangle over `[i, i+2m+1]`, decreasing on one over `[i-1, i+2m]`.
pub fn classify_edge(t: &Tableau, iv: Interval) -> Result<EdgeKind, SkeletonError> {
    require_dyck(t, iv)?;
    if has_rectangle(t, iv.lo, iv.hi + 1) {
        Ok(EdgeKind::Increasing)
    } else if has_rectangle(t, iv.lo - 1, iv.hi) {
        Ok(EdgeKind::Decreasing)
    } else {
        Ok(EdgeKind::Preserving)
    }
}

/// The target of the edge labelled `I` and its cycle.
pub fn apply_edge(t: &Tableau, iv: Interval) -> Result<(Tableau, Cycle), SkeletonError> {
    let pi = require_dyck(t, iv)?;
    let cycle = dyck_cycle(&pi, iv)?;
    let target = cycle.apply_tableau(t)?;
    Ok((target, cycle))
}

/// Block index `j` (0-based) with `I⁻ ∪ {k} ⊆ α^(j)` and `I⁺ ⊆ α^(j+1)`.
pub fn placement(alpha: &Composition, iv: Interval) -> Option<usize> {
    let k = iv.mid();
    let j = alpha.block_of(k)?;
    if j + 1 >= alpha.len() {
        return None;
    }
    let (a, b) = (alpha.block(j), alpha.block(j + 1));
    (a.contains(iv.lo) && b.contains(iv.hi)).then_some(j)
}

/// The descent composition after an edge of the given type.
pub fn descent_transition(alpha: &Composition, iv: Interval, kind: EdgeKind) -> Result<Composition, SkeletonError> {
    let err = || SkeletonError::Placement { composition: alpha.to_string(), interval: iv };
    let j = placement(alpha, iv).ok_or_else(err)?;
    let k = iv.mid();
    let mut blocks = alpha.block_sets();
    match kind {
        EdgeKind::Preserving => {
            blocks[j].retain(|&x| x != k);
            blocks[j + 1].insert(0, k);
        }
        EdgeKind::Increasing => {
            blocks[j].retain(|&x| x != k);
            let rest: Vec<usize> = blocks[j + 1].iter().copied().filter(|&x| x > iv.hi).collect();
            blocks[j + 1] = (k..=iv.hi).collect();
            blocks.insert(j + 2, rest);
        }
        EdgeKind::Decreasing => {
            if alpha.block(j).lo != iv.lo {
                return Err(err());
            }
            blocks[j + 1].insert(0, k);
            let lower: Vec<usize> = (iv.lo..k).collect();
            if j == 0 {
                blocks[0] = lower;
            } else {
                blocks[j - 1].extend(lower);
                blocks.remove(j);
            }
        }
    }
    Ok(Composition::from_blocks(&blocks)?)
}

/// The first type, in the order preserving, increasing, decreasing, whose
/// transition turns `alpha` into `beta`.
pub fn infer_kind(alpha: &Composition, iv: Interval, beta: &Composition) -> Option<EdgeKind> {
    EdgeKind::ALL
        .into_iter()
        .find(|&kind| descent_transition(alpha, iv, kind).is_ok_and(|b| &b == beta))
}
