use cskit_crystal::{e_word, f_word, BracketState, Cycle};
use cskit_tableaux::{insertion_tableau, word, Interval};

use crate::SkeletonError;

fn check_interval(n: usize, iv: Interval) -> Result<(), SkeletonError> {
    if iv.len() < 3 || !iv.is_odd() || iv.hi > n {
        return Err(SkeletonError::BadInterval { interval: iv, n });
    }
    Ok(())
}

/// `P(π|_I)` is the two-row tableau with `[i, i+m]` in the bottom row and
/// `[i+m+1, i+2m]` above it.
pub fn is_dyck_interval(pi: &[usize], iv: Interval) -> Result<bool, SkeletonError> {
    check_interval(pi.len(), iv)?;
    let p = insertion_tableau(&word::restrict(pi, iv));
    let k = iv.mid();
    let bottom: Vec<usize> = (iv.lo..=k).collect();
    let top: Vec<usize> = (k + 1..=iv.hi).collect();
    Ok(p.rows() == [bottom, top])
}

/// The bracketing form: with `w = destd(π|_I)`, both `e_i(w)` and `f_i((i+1) w)` are undefined.
pub fn is_dyck_interval_bracket(pi: &[usize], iv: Interval) -> Result<bool, SkeletonError> {
    check_interval(pi.len(), iv)?;
    let Ok(w) = word::destandardize_dyck(&word::restrict(pi, iv), iv) else {
        return Ok(false);
    };
    let i = iv.lo;
    let mut padded = vec![i + 1];
    padded.extend_from_slice(&w);
    Ok(e_word(&w, i).is_none() && f_word(&padded, i).is_none())
}

/// All Dyck pattern intervals of `π`, ordered by lower end then length.
pub fn dyck_intervals(pi: &[usize]) -> Vec<Interval> {
    let n = pi.len();
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in (lo + 2..=n).step_by(2) {
            let iv = Interval::new(lo, hi);
            if is_dyck_interval(pi, iv).unwrap_or(false) {
                out.push(iv);
            }
        }
    }
    out
}

/// `(m + π_p, …, π_p)` where `π_p` is the letter of `π|_I` carrying the
/// unbracketed `i` of `destd(π|_I)`.
pub fn dyck_cycle(pi: &[usize], iv: Interval) -> Result<Cycle, SkeletonError> {
    if !is_dyck_interval(pi, iv)? {
        return Err(SkeletonError::NotDyck { interval: iv, word: pi.to_vec() });
    }
    let sub = word::restrict(pi, iv);
    let w = word::destandardize_dyck(&sub, iv)?;
    let state = BracketState::new(&w, iv.lo);
    let p = match state.free_i.as_slice() {
        [p] => *p,
        _ => return Err(SkeletonError::NotDyck { interval: iv, word: pi.to_vec() }),
    };
    Ok(Cycle::descending(sub[p] + iv.half(), sub[p]))
}
