use std::fmt;

use cskit_skeleton::{Arrow, EdgeKind, EdgeView};
use cskit_tableaux::Interval;

use crate::AxiomError;

use EdgeKind::{Decreasing as Dec, Increasing as Inc, Preserving as Pres};

/// The local configurations two outgoing edges of a crystal skeleton vertex can form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CommutationCase {
    C1a,
    C1b,
    C2ai,
    C2aii,
    C2bi,
    C2bii,
    C2biii,
    C3a,
    C3b,
}

impl CommutationCase {
    pub const ALL: [CommutationCase; 9] = [
        CommutationCase::C1a,
        CommutationCase::C1b,
        CommutationCase::C2ai,
        CommutationCase::C2aii,
        CommutationCase::C2bi,
        CommutationCase::C2bii,
        CommutationCase::C2biii,
        CommutationCase::C3a,
        CommutationCase::C3b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CommutationCase::C1a => "1a",
            CommutationCase::C1b => "1b",
            CommutationCase::C2ai => "2ai",
            CommutationCase::C2aii => "2aii",
            CommutationCase::C2bi => "2bi",
            CommutationCase::C2bii => "2bii",
            CommutationCase::C2biii => "2biii",
            CommutationCase::C3a => "3a",
            CommutationCase::C3b => "3b",
        }
    }

    /// The case the configuration becomes after reversing every edge and
    /// reflecting every interval. Squares and the octagon are self-dual; the
    /// triangles and pentagons of cases 2 and 3 swap.
    pub fn dual(self) -> CommutationCase {
        match self {
            CommutationCase::C2aii => CommutationCase::C3a,
            CommutationCase::C3a => CommutationCase::C2aii,
            CommutationCase::C2bii => CommutationCase::C3b,
            CommutationCase::C3b => CommutationCase::C2bii,
            c => c,
        }
    }

    /// Cases 1a and 1b share one square; duality is only claimed up to that.
    pub fn family(self) -> &'static str {
        match self {
            CommutationCase::C1a | CommutationCase::C1b => "1",
            c => c.as_str(),
        }
    }
}

impl fmt::Display for CommutationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A matched configuration. `sink` is the vertex where the two paths out of
/// the starting vertex meet, and `closing` are the last edge of each path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseMatch {
    pub case: CommutationCase,
    pub sink: usize,
    pub closing: [Arrow; 2],
}

fn is(a: &Arrow, kinds: &[EdgeKind]) -> bool {
    a.kind.is_some_and(|k| kinds.contains(&k))
}

fn iv(lo: usize, hi: usize) -> Option<Interval> {
    (lo >= 1 && lo <= hi).then(|| Interval::new(lo, hi))
}

struct Scope<'a, G: EdgeView> {
    g: &'a G,
}

impl<G: EdgeView> Scope<'_, G> {
    fn out(&self, v: usize, lo: usize, hi: usize) -> Option<Arrow> {
        self.g.arrow_from(v, iv(lo, hi)?)
    }

    fn enters(&self, v: usize, lo: usize, hi: usize) -> bool {
        iv(lo, hi).is_some_and(|x| self.g.incoming(v).iter().any(|a| a.interval == x))
    }
}

/// Every case whose configuration is present for the outgoing edges `I`
/// and `J` of `v`, in the order 1a, 1b, 2ai, …, 3b; the edges are taken in
/// order of their least letter.
///
/// The cases presuppose that `I` and `J` are disjoint, or overlap with `I`
/// not increasing and `J ⊄ I`, or that `J = [i+1, i+2m-1]`. Any other pair
/// is rejected as [`AxiomError::Uncovered`].
pub fn commutation_matches<G: EdgeView>(g: &G, v: usize, i_iv: Interval, j_iv: Interval) -> Result<Vec<CaseMatch>, AxiomError> {
    let a = g.arrow_from(v, i_iv).ok_or(AxiomError::NotOutgoing { vertex: v, interval: i_iv })?;
    let b = g.arrow_from(v, j_iv).ok_or(AxiomError::NotOutgoing { vertex: v, interval: j_iv })?;
    if i_iv.lo == j_iv.lo {
        return Err(AxiomError::SameStart { first: i_iv, second: j_iv });
    }
    if i_iv.lo > j_iv.lo {
        return commutation_matches(g, v, j_iv, i_iv);
    }
    let s = Scope { g };
    let (i, m) = (i_iv.lo, i_iv.half());
    let (j, l) = (j_iv.lo, j_iv.half());
    let (ti, tj) = (a.dst, b.dst);
    let mut found = Vec::new();
    let mut hit = |case, sink, x: Arrow, y: Arrow| found.push(CaseMatch { case, sink, closing: [x, y] });

    if i_iv.hi < j {
        // Disjoint intervals: a square.
        if let (Some(jp), Some(ip)) = (s.out(ti, j_iv.lo, j_iv.hi), s.out(tj, i_iv.lo, i_iv.hi)) {
            if jp.dst == ip.dst {
                let sq = jp.dst;
                let adjacent = i_iv.hi + 1 == j;
                let wide = adjacent && s.enters(v, i, i + 2 * m + 2) && s.out(sq, j - 2, j + 2 * l).is_some();
                if !wide && a.kind == ip.kind && b.kind == jp.kind {
                    hit(CommutationCase::C1a, sq, jp, ip);
                }
                if wide && is(&a, &[Inc]) && is(&jp, &[Dec]) && is(&b, &[Pres]) && is(&ip, &[Pres]) {
                    hit(CommutationCase::C1b, sq, jp, ip);
                }
            }
        }
    } else if j_iv.hi > i_iv.hi {
        // Overlapping, J not inside I.
        if is(&a, &[Inc]) {
            return Err(AxiomError::Uncovered { first: i_iv, second: j_iv });
        }
        if m > 1 {
            if let (Some(jp), Some(ip)) = (s.out(ti, j - 1, j + 2 * l + 1), s.out(tj, i + 1, i + 2 * m - 1)) {
                if jp.dst == ip.dst && [a, b, jp, ip].iter().all(|e| is(e, &[Pres])) {
                    hit(CommutationCase::C2ai, jp.dst, jp, ip);
                }
            }
        }
        if m == 1 && j == i + 2 {
            if let Some(jp) = s.out(ti, i + 1, i + 3 + 2 * l) {
                if jp.dst == tj && is(&a, &[Pres]) && is(&b, &[Dec]) && is(&jp, &[Dec]) {
                    hit(CommutationCase::C2aii, tj, b, jp);
                }
            }
        }
        if let Some(jp) = s.out(ti, j_iv.lo, j_iv.hi) {
            if m > 1 {
                let octagon = (|| {
                    let ip = s.out(tj, i + 1, i + 2 * m - 1)?;
                    let jpp = s.out(jp.dst, j - 1, j + 2 * l - 1)?;
                    let ipp = s.out(ip.dst, i, i + 2 * m - 2)?;
                    let ippp = s.out(jpp.dst, i, i + 2 * m - 2)?;
                    let jppp = s.out(ipp.dst, j - 2, j + 2 * l)?;
                    let ok = ippp.dst == jppp.dst
                        && is(&a, &[Pres, Dec])
                        && is(&ipp, &[Pres, Dec])
                        && is(&jp, &[Pres, Inc])
                        && is(&jppp, &[Pres, Inc])
                        && [b, ip, jpp, ippp].iter().all(|e| is(e, &[Pres]));
                    ok.then_some((ippp, jppp))
                })();
                if let Some((x, y)) = octagon {
                    hit(CommutationCase::C2bi, x.dst, x, y);
                }
            }
            if m == 1 && j == i + 2 {
                if let (Some(ip), Some(jpp)) = (s.out(tj, i, i + 2 + 2 * l), s.out(jp.dst, i + 1, i + 1 + 2 * l)) {
                    if ip.dst == jpp.dst && is(&a, &[Pres, Dec]) && is(&b, &[Dec]) && is(&jpp, &[Dec]) {
                        hit(CommutationCase::C2bii, ip.dst, ip, jpp);
                    }
                }
            }
            if let Some(ip) = s.out(tj, i_iv.lo, i_iv.hi) {
                if ip.dst == jp.dst && jp.kind == b.kind && ip.kind == a.kind && is(&b, &[Pres, Inc]) && is(&a, &[Pres, Dec]) {
                    hit(CommutationCase::C2biii, ip.dst, jp, ip);
                }
            }
        }
    } else if j == i + 1 && l + 1 == m {
        // J = [i+1, i+2m-1] nested in I.
        if let Some(jp) = s.out(ti, i + 2 * m - 1, i + 2 * m + 1) {
            if jp.dst == tj && is(&a, &[Inc]) && is(&b, &[Inc]) && is(&jp, &[Pres]) {
                hit(CommutationCase::C3a, tj, b, jp);
            }
        }
        let pentagon = (|| {
            let jp = s.out(ti, i, i + 2 * m - 2)?;
            let ip = s.out(tj, i, i + 2 * m - 2)?;
            let jpp = s.out(ip.dst, i + 2 * m - 2, i + 2 * m)?;
            let ok = jpp.dst == jp.dst && is(&b, &[Inc]) && is(&jp, &[Inc]) && is(&jpp, &[Pres, Inc]);
            ok.then_some((jp, jpp))
        })();
        if let Some((x, y)) = pentagon {
            hit(CommutationCase::C3b, x.dst, x, y);
        }
    } else {
        return Err(AxiomError::Uncovered { first: i_iv, second: j_iv });
    }
    Ok(found)
}

/// The first case matching the outgoing edges `I` and `J` of `v`, or `None`
/// when the pair is covered by a case but no configuration is present.
pub fn commutation_case<G: EdgeView>(g: &G, v: usize, i_iv: Interval, j_iv: Interval) -> Result<Option<CommutationCase>, AxiomError> {
    Ok(commutation_matches(g, v, i_iv, j_iv)?.first().map(|c| c.case))
}

/// Unordered pairs of distinct outgoing intervals at `v`, smaller start first.
pub fn outgoing_pairs<G: EdgeView>(g: &G, v: usize) -> Vec<(Interval, Interval)> {
    let mut ivs: Vec<Interval> = g.outgoing(v).iter().map(|a| a.interval).collect();
    ivs.sort_by_key(|x| (x.lo, x.hi));
    ivs.dedup();
    let mut pairs = Vec::new();
    for (k, x) in ivs.iter().enumerate() {
        for y in &ivs[k + 1..] {
            pairs.push((*x, *y));
        }
    }
    pairs
}
