//! Words over the positive integers.

use crate::{Interval, TableauError};

pub type Word = Vec<usize>;

/// Replaces the letters of `w` by `1..=len`, equal letters numbered left to right.
pub fn standardize(w: &[usize]) -> Word {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&p| (w[p], p));
    let mut out = vec![0; w.len()];
    for (rank, p) in idx.into_iter().enumerate() {
        out[p] = rank + 1;
    }
    out
}

pub fn is_permutation(w: &[usize]) -> bool {
    let mut seen = vec![false; w.len() + 1];
    for &x in w {
        if x == 0 || x > w.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// The subword of letters lying in `iv`, order preserved.
pub fn restrict(w: &[usize], iv: Interval) -> Word {
    w.iter().copied().filter(|&x| iv.contains(x)).collect()
}

/// Positions (0-based) of each letter of a permutation: `pos[x]` is where `x` sits.
pub fn positions(pi: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; pi.len() + 1];
    for (p, &x) in pi.iter().enumerate() {
        pos[x] = p;
    }
    pos
}

/// Destandardizes `pi_i`, a word whose letters are exactly `iv = [i, i+2m]`:
/// letters up to `i+m` become `i`, larger letters become `i+1`.
///
/// Both letter ranges must appear in increasing order.
pub fn destandardize_dyck(pi_i: &[usize], iv: Interval) -> Result<Word, TableauError> {
    let mut sorted = pi_i.to_vec();
    sorted.sort_unstable();
    if sorted.len() != iv.len() || sorted.iter().zip(iv.iter()).any(|(&a, b)| a != b) {
        return Err(TableauError::LettersNotInterval { lo: iv.lo, hi: iv.hi });
    }
    let mid = iv.mid();
    let low: Vec<usize> = pi_i.iter().copied().filter(|&x| x <= mid).collect();
    let high: Vec<usize> = pi_i.iter().copied().filter(|&x| x > mid).collect();
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    if !increasing(&low) || !increasing(&high) {
        return Err(TableauError::NotMonotone { lo: iv.lo, mid, hi: iv.hi });
    }
    Ok(pi_i
        .iter()
        .map(|&x| if x <= mid { iv.lo } else { iv.lo + 1 })
        .collect())
}

/// Parses a word such as `"645123"` (single digits) or `"10,7,8"`.
pub fn parse(s: &str) -> Result<Word, TableauError> {
    let s = s.trim();
    let tokens: Vec<&str> = if s.contains(',') || s.contains(' ') {
        s.split([',', ' ']).filter(|t| !t.is_empty()).collect()
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    let mut w = Vec::with_capacity(tokens.len());
    for t in tokens {
        match t.parse::<usize>() {
            Ok(x) if x > 0 => w.push(x),
            _ => return Err(TableauError::ZeroLetter),
        }
    }
    Ok(w)
}
