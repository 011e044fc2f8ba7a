use std::fmt;
use std::str::FromStr;

use cskit_tableaux::{Composition, Partition, Tableau};

use crate::TwoRowError;

/// `Down` is `-1` (a letter in the bottom row), `Up` is `+1` (second row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Up,
}

impl Step {
    pub fn value(self) -> i64 {
        match self {
            Step::Down => -1,
            Step::Up => 1,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::Down => Step::Up,
            Step::Up => Step::Down,
        }
    }

    fn char(self) -> char {
        match self {
            Step::Down => 'd',
            Step::Up => 'u',
        }
    }
}

/// A sequence of ±1 steps whose partial sums never exceed 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, TwoRowError> {
        let mut h = 0;
        for (k, s) in steps.iter().enumerate() {
            h += s.value();
            if h > 0 {
                return Err(TwoRowError::AboveZero(k + 1));
            }
        }
        Ok(LatticePath { steps })
    }

    /// `(-1)^{λ₁} (+1)^{λ₂}`, the path of the row-superstandard tableau.
    pub fn trivial(l1: usize, l2: usize) -> Result<Self, TwoRowError> {
        if l2 > l1 {
            return Err(TwoRowError::BadShape(l1, l2));
        }
        let mut steps = vec![Step::Down; l1];
        steps.extend(std::iter::repeat_n(Step::Up, l2));
        Ok(LatticePath { steps })
    }

    /// Every path with `λ₁` down-steps and `λ₂` up-steps, in lexicographic
    /// order with `Down < Up`.
    pub fn all(l1: usize, l2: usize) -> Result<Vec<LatticePath>, TwoRowError> {
        if l2 > l1 {
            return Err(TwoRowError::BadShape(l1, l2));
        }
        fn go(down: usize, up: usize, h: i64, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
            if down == 0 && up == 0 {
                out.push(LatticePath { steps: cur.clone() });
                return;
            }
            if down > 0 {
                cur.push(Step::Down);
                go(down - 1, up, h - 1, cur, out);
                cur.pop();
            }
            if up > 0 && h < 0 {
                cur.push(Step::Up);
                go(down, up - 1, h + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(l1, l2, 0, &mut Vec::with_capacity(l1 + l2), &mut out);
        Ok(out)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `p_k` for `1 ≤ k ≤ n`; `None` outside that range.
    pub fn step(&self, k: usize) -> Option<Step> {
        k.checked_sub(1).and_then(|i| self.steps.get(i)).copied()
    }

    /// `h_0 = 0, h_1, …, h_n`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h[h.len() - 1] + s.value());
        }
        h
    }

    /// `(λ₁, λ₂)`: the number of down-steps and of up-steps.
    pub fn shape(&self) -> (usize, usize) {
        let up = self.steps.iter().filter(|s| **s == Step::Up).count();
        (self.len() - up, up)
    }

    pub fn partition(&self) -> Partition {
        let (l1, l2) = self.shape();
        Partition::from_padded(vec![l1, l2]).expect("λ₁ ≥ λ₂ by the height condition")
    }

    /// Positions of the up-steps, then of the down-steps.
    pub fn reading_word(&self) -> Vec<usize> {
        let at = |s: Step| (1..=self.len()).filter(move |&k| self.steps[k - 1] == s);
        at(Step::Up).chain(at(Step::Down)).collect()
    }

    /// Positions `k` with `p_k = -1` and `p_{k+1} = +1`.
    pub fn local_minima(&self) -> Vec<usize> {
        (1..self.len()).filter(|&k| self.steps[k - 1] == Step::Down && self.steps[k] == Step::Up).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.local_minima())
    }

    pub(crate) fn with_steps(steps: Vec<Step>) -> Self {
        debug_assert!(LatticePath::new(steps.clone()).is_ok());
        LatticePath { steps }
    }
}

impl FromStr for LatticePath {
    type Err = TwoRowError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'd' | 'D' => Ok(Step::Down),
                'u' | 'U' => Ok(Step::Up),
                c => Err(TwoRowError::BadStep(c)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.char()))
    }
}

/// `p_i = -1` when `i` is in the bottom row of `T`, `+1` when in the second.
pub fn path_of(t: &Tableau) -> Result<LatticePath, TwoRowError> {
    if t.rows().len() > 2 {
        return Err(TwoRowError::NotTwoRow);
    }
    if !t.is_standard() {
        return Err(TwoRowError::NotStandard);
    }
    let mut steps = vec![Step::Down; t.size()];
    if let Some(second) = t.rows().get(1) {
        for &x in second {
            steps[x - 1] = Step::Up;
        }
    }
    LatticePath::new(steps)
}

pub fn tableau_of(p: &LatticePath) -> Tableau {
    let row = |s| (1..=p.len()).filter(|&k| p.steps[k - 1] == s).collect::<Vec<_>>();
    let rows: Vec<_> = [row(Step::Down), row(Step::Up)].into_iter().filter(|r| !r.is_empty()).collect();
    Tableau::new(rows).expect("a lattice path gives a standard tableau")
}
