use std::collections::BTreeMap;
use std::fmt;

use cskit_tableaux::Interval;

use crate::path::{LatticePath, Step};

/// `p = (-1)^{n_0} D_1 (-1)^{n_1} D_2 ⋯ D_ℓ (-1)^{n_ℓ}` with each `D_k` a
/// Dyck path. The `(-1)` steps are the down-steps lit from the east: no
/// later height rises above the height they start from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectDecomp {
    /// `n_0, …, n_ℓ`; only the first and last can be zero.
    pub exponents: Vec<usize>,
    /// The positions of `D_1, …, D_ℓ`.
    pub dyck: Vec<Interval>,
}

/// The set composition `(α⁽⁰⁾, β⁽¹⁾, α⁽¹⁾, …, β⁽ˡ⁾, α⁽ˡ⁾)` of `[1, n]`:
/// `α⁽ᵏ⁾` holds the positions of `(-1)^{n_k}` and `β⁽ᵏ⁾` those of `D_k`.
/// Even slots are α blocks, odd slots β blocks; `None` is an empty α block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RComp {
    blocks: Vec<Option<Interval>>,
}

impl RectDecomp {
    pub fn rcomp(&self) -> RComp {
        let mut blocks = Vec::with_capacity(2 * self.exponents.len() - 1);
        let mut next = 1;
        let alpha = |len: usize, next: &mut usize| {
            let b = (len > 0).then(|| Interval::new(*next, *next + len - 1));
            *next += len;
            b
        };
        blocks.push(alpha(self.exponents[0], &mut next));
        for (d, &e) in self.dyck.iter().zip(&self.exponents[1..]) {
            debug_assert_eq!(d.lo, next);
            blocks.push(Some(*d));
            next = d.hi + 1;
            blocks.push(alpha(e, &mut next));
        }
        RComp { blocks }
    }
}

impl RComp {
    pub fn blocks(&self) -> &[Option<Interval>] {
        &self.blocks
    }

    pub fn alphas(&self) -> impl Iterator<Item = Option<Interval>> + '_ {
        self.blocks.iter().step_by(2).copied()
    }

    pub fn betas(&self) -> impl Iterator<Item = Interval> + '_ {
        self.blocks.iter().skip(1).step_by(2).flatten().copied()
    }

    /// Block sizes, zeros included.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.map_or(0, |x| x.len())).collect()
    }

    /// Whether `k` lies in some β block.
    pub fn in_beta(&self, k: usize) -> bool {
        self.betas().any(|b| b.contains(k))
    }

    /// The β block containing all of `I`, if there is one.
    pub fn beta_containing(&self, iv: Interval) -> Option<Interval> {
        self.betas().find(|b| iv.is_subset_of(b))
    }

    /// The letters in α blocks, increasing.
    pub fn alpha_letters(&self) -> Vec<usize> {
        self.alphas().flatten().flat_map(|b| b.lo..=b.hi).collect()
    }

    /// `self ≥ other`: both have the same number of α letters and the `j`-th
    /// α letter of `self` is at least that of `other` for every `j`.
    pub fn dominates(&self, other: &RComp) -> bool {
        let (a, b) = (self.alpha_letters(), other.alpha_letters());
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x >= y)
    }
}

impl fmt::Display for RComp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            match b {
                Some(x) => write!(f, "{x}")?,
                None => f.write_str("∅")?,
            }
        }
        f.write_str(")")
    }
}

/// Positions `k` with `p_k = -1` and `h_j ≤ h_k` for every `j ≥ k`.
pub fn lit_down_steps(p: &LatticePath) -> Vec<bool> {
    let h = p.heights();
    let n = p.len();
    let mut suffix_max = vec![i64::MIN; n + 2];
    for j in (0..=n).rev() {
        suffix_max[j] = suffix_max[j + 1].max(h[j]);
    }
    (1..=n).map(|k| p.steps()[k - 1] == Step::Down && suffix_max[k] <= h[k]).collect()
}

pub fn rect_decomp(p: &LatticePath) -> RectDecomp {
    let mut exponents = vec![0];
    let mut dyck = Vec::new();
    let mut start: Option<usize> = None;
    for (k, lit) in (1..).zip(lit_down_steps(p)) {
        if lit {
            if let Some(s) = start.take() {
                dyck.push(Interval::new(s, k - 1));
                exponents.push(0);
            }
            *exponents.last_mut().expect("never empty") += 1;
        } else if start.is_none() {
            start = Some(k);
        }
    }
    if let Some(s) = start {
        dyck.push(Interval::new(s, p.len()));
        exponents.push(0);
    }
    RectDecomp { exponents, dyck }
}

pub fn rcomp(p: &LatticePath) -> RComp {
    rect_decomp(p).rcomp()
}

/// Paths of shape `(λ₁, λ₂)` grouped by `rcomp`, each group in path order,
/// groups ordered by their least path.
pub fn scc_by_rcomp(paths: &[LatticePath]) -> Vec<Vec<LatticePath>> {
    let mut groups: BTreeMap<RComp, Vec<LatticePath>> = BTreeMap::new();
    for p in paths {
        groups.entry(rcomp(p)).or_default().push(p.clone());
    }
    let mut out: Vec<Vec<LatticePath>> = groups
        .into_values()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect();
    out.sort();
    out
}
