use std::fmt;

use cskit_tableaux::{word, Tableau, TableauError};

use crate::{f, BracketState, CrystalError};

/// A cycle `(c_0, c_1, …, c_k)` with `c_0 > c_1 > … > c_k` consecutive,
/// sending `c_0 ↦ c_1 ↦ … ↦ c_k ↦ c_0`. A single value is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    values: Vec<usize>,
}

impl Cycle {
    /// The cycle `(top, top-1, …, bottom)`.
    pub fn descending(top: usize, bottom: usize) -> Self {
        assert!(bottom >= 1 && bottom <= top, "cycle bounds");
        Cycle { values: (bottom..=top).rev().collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.values.len() <= 1
    }

    pub fn top(&self) -> usize {
        self.values[0]
    }

    pub fn bottom(&self) -> usize {
        *self.values.last().expect("nonempty cycle")
    }

    pub fn apply(&self, x: usize) -> usize {
        if self.is_identity() || x > self.top() || x < self.bottom() {
            x
        } else if x == self.bottom() {
            self.top()
        } else {
            x - 1
        }
    }

    pub fn apply_word(&self, w: &[usize]) -> Vec<usize> {
        w.iter().map(|&x| self.apply(x)).collect()
    }

    pub fn apply_tableau(&self, t: &Tableau) -> Result<Tableau, TableauError> {
        t.map_entries(|x| self.apply(x))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        let sep = if self.values.iter().any(|&v| v >= 10) { "," } else { "" };
        write!(f, "({})", s.join(sep))
    }
}

/// `cycle(b, i) = (π_p + n_left + n_right, …, π_p)` with `π = std(row(b))`
/// and `p` the position acted on by `f_i`.
pub fn cycle_of(b: &Tableau, i: usize) -> Result<Cycle, CrystalError> {
    let w = b.reading_word();
    let state = BracketState::new(&w, i);
    let p = state.p().ok_or(CrystalError::Undefined { i })?;
    let pi = word::standardize(&w);
    let len = state.n_left().unwrap_or(0) + state.n_right().unwrap_or(0);
    Ok(Cycle::descending(pi[p] + len, pi[p]))
}

/// Whether the `f_i` edge at `b` stays inside its quasi-crystal, decided by comparing standardizations.
pub fn quasi_edge(b: &Tableau, i: usize) -> Result<bool, CrystalError> {
    let fb = f(b, i).ok_or(CrystalError::Undefined { i })?;
    Ok(b.standardize() == fb.standardize())
}
