use std::fmt;

use crate::{Interval, TableauError};

/// An integer composition of `n`.
///
/// Besides its parts, a composition is viewed as the sequence of consecutive
/// blocks `α^(1), …, α^(ℓ)` of `[1,n]`, block `j` holding `α_j` integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

pub(crate) fn dominates_parts(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.contains(&0) {
            return Err(TableauError::NotAComposition(parts));
        }
        Ok(Composition { parts })
    }

    /// The composition with the given descent set in `[1, n-1]`.
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Self {
        let mut ds: Vec<usize> = descents.iter().copied().filter(|&d| d > 0 && d < n).collect();
        ds.sort_unstable();
        ds.dedup();
        let mut parts = Vec::with_capacity(ds.len() + 1);
        let mut prev = 0;
        for d in ds {
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Composition { parts }
    }

    /// Builds a composition from explicit blocks; empty blocks are skipped.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self, TableauError> {
        let mut next = 1;
        let mut parts = Vec::new();
        for b in blocks.iter().filter(|b| !b.is_empty()) {
            let mut sorted = b.clone();
            sorted.sort_unstable();
            for (k, &x) in sorted.iter().enumerate() {
                if x != next + k {
                    return Err(TableauError::BadBlocks { n: next + sorted.len() - 1 });
                }
            }
            next += sorted.len();
            parts.push(sorted.len());
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being composed.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block `j` (0-based) as an interval.
    pub fn block(&self, j: usize) -> Interval {
        let lo: usize = self.parts[..j].iter().sum::<usize>() + 1;
        Interval::new(lo, lo + self.parts[j] - 1)
    }

    pub fn blocks(&self) -> Vec<Interval> {
        (0..self.len()).map(|j| self.block(j)).collect()
    }

    /// Blocks as explicit sets.
    pub fn block_sets(&self) -> Vec<Vec<usize>> {
        self.blocks().iter().map(|b| b.iter().collect()).collect()
    }

    /// Index (0-based) of the block containing `x`.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        let mut hi = 0;
        for (j, &p) in self.parts.iter().enumerate() {
            hi += p;
            if x >= 1 && x <= hi {
                return Some(j);
            }
        }
        None
    }

    /// Descent set `{α_1, α_1+α_2, …}` without `n`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = 0;
        for &p in &self.parts[..self.len().saturating_sub(1)] {
            s += p;
            out.push(s);
        }
        out
    }

    pub fn rev(&self) -> Composition {
        Composition { parts: self.parts.iter().rev().copied().collect() }
    }

    /// Weak dominance on partial sums, shorter sequences padded with zeros.
    pub fn dominates(&self, other: &Composition) -> bool {
        dominates_parts(&self.parts, &other.parts)
    }

    pub fn strictly_dominates(&self, other: &Composition) -> bool {
        self != other && self.dominates(other)
    }

    /// `α ∖ {n}`: the last part shrinks by one and disappears at zero.
    pub fn without_last(&self) -> Composition {
        let mut parts = self.parts.clone();
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            if *last == 0 {
                parts.pop();
            }
        }
        Composition { parts }
    }

    /// `α ∖ {1}` relabelled to start at 1.
    pub fn without_first(&self) -> Composition {
        let mut parts = self.parts.clone();
        if let Some(first) = parts.first_mut() {
            *first -= 1;
            if *first == 0 {
                parts.remove(0);
            }
        }
        Composition { parts }
    }

    /// Whether the parts are weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// All compositions refining `self` (adjacent parts of the result sum to parts of `self`).
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        let fixed = self.descent_set();
        let free: Vec<usize> = (1..n).filter(|d| !fixed.contains(d)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut ds = fixed.clone();
            ds.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &d)| d));
            out.push(Composition::from_descent_set(n, &ds));
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
