use std::fmt;

use cskit_tableaux::Interval;

use crate::path::{LatticePath, Step};

/// The two local shapes a skeleton edge can take on a lattice path.
///
/// Type A replaces `D^{m+1} U^m` by `D^m U^m D`; type B replaces
/// `U D^m U^m` by `D^m U^{m+1}`. Here `D = -1` and `U = +1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    A,
    B,
}

impl EdgeType {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeType::A => "A",
            EdgeType::B => "B",
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalEdge {
    pub interval: Interval,
    pub ty: EdgeType,
    pub target: LatticePath,
}

fn run(s: &[Step], step: Step, len: usize) -> bool {
    s.len() == len && s.iter().all(|&x| x == step)
}

/// The type of the pattern `p` carries on `I`, if any.
pub fn edge_type_at(p: &LatticePath, iv: Interval) -> Option<EdgeType> {
    if iv.hi > p.len() || iv.len().is_multiple_of(2) || iv.len() < 3 {
        return None;
    }
    let s = &p.steps()[iv.lo - 1..iv.hi];
    let m = iv.half();
    if run(&s[..m + 1], Step::Down, m + 1) && run(&s[m + 1..], Step::Up, m) {
        Some(EdgeType::A)
    } else if s[0] == Step::Up && run(&s[1..m + 1], Step::Down, m) && run(&s[m + 1..], Step::Up, m) {
        Some(EdgeType::B)
    } else {
        None
    }
}

/// The path reached along the edge labelled `I`, if `p` has one.
pub fn apply_path_edge(p: &LatticePath, iv: Interval) -> Option<(EdgeType, LatticePath)> {
    let ty = edge_type_at(p, iv)?;
    let m = iv.half();
    let mut steps = p.steps().to_vec();
    let window = &mut steps[iv.lo - 1..iv.hi];
    match ty {
        EdgeType::A => {
            window[..m].fill(Step::Down);
            window[m..2 * m].fill(Step::Up);
            window[2 * m] = Step::Down;
        }
        EdgeType::B => {
            window[..m].fill(Step::Down);
            window[m..].fill(Step::Up);
        }
    }
    Some((ty, LatticePath::with_steps(steps)))
}

/// Every outgoing edge of `p`, ordered by interval.
pub fn local_edges(p: &LatticePath) -> Vec<LocalEdge> {
    let n = p.len();
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in (lo + 2..=n).step_by(2) {
            let interval = Interval::new(lo, hi);
            if let Some((ty, target)) = apply_path_edge(p, interval) {
                out.push(LocalEdge { interval, ty, target });
            }
        }
    }
    out.sort_by_key(|e| e.interval);
    out
}
