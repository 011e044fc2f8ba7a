use std::fmt;
use std::str::FromStr;

use crate::TableauError;

/// An integer partition, parts weakly decreasing and strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(TableauError::NotAPartition(parts))
        }
    }

    /// Drops trailing zeros before validating.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, TableauError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part in row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All parts equal (the empty partition counts as a rectangle).
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Rows (0-based) whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// The partitions obtained by removing one box, in order of the row removed.
    pub fn minus_one_box(&self) -> Vec<(usize, Partition)> {
        self.removable_rows()
            .into_iter()
            .map(|r| {
                let mut p = self.parts.clone();
                p[r] -= 1;
                (r, Partition::from_padded(p).expect("removing a corner keeps a partition"))
            })
            .collect()
    }

    /// Weak dominance: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        crate::composition::dominates_parts(&self.parts, &other.parts)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of every size from 1 to `max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<Partition> {
        (1..=max_n).flat_map(Partition::all).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    /// Parses `"3,2,1"`; surrounding parentheses are allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(p) => parts.push(p),
                Err(_) => return Err(TableauError::NotAPartition(parts)),
            }
        }
        Partition::new(parts)
    }
}
