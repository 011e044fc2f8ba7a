use std::fmt;

use crate::word::{self, Word};
use crate::{Composition, Interval, Partition, TableauError};

/// A filling of a straight or skew Young diagram, French notation.
///
/// `rows[r]` holds the filled cells of row `r` (row 0 at the bottom), which
/// start in column `inner[r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// A straight-shape semistandard tableau.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let inner = vec![0; rows.len()];
        Self::skew(inner, rows)
    }

    /// A skew tableau; `inner[r]` empty cells precede the filling of row `r`.
    pub fn skew(mut inner: Vec<usize>, mut rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        inner.resize(rows.len().max(inner.len()), 0);
        rows.resize(inner.len(), Vec::new());
        while rows.last().is_some_and(|r| r.is_empty()) && inner.last() == Some(&0) {
            rows.pop();
            inner.pop();
        }
        let t = Tableau { inner, rows };
        t.validate()?;
        Ok(t)
    }

    /// Single-digit rows separated by `/`, bottom row first: `"136/24/5"`.
    /// Rows with multi-digit letters use commas: `"1,2,10/3"`.
    pub fn parse(s: &str) -> Result<Self, TableauError> {
        let rows: Result<Vec<Word>, _> = s.split('/').map(word::parse).collect();
        Self::new(rows?)
    }

    fn validate(&self) -> Result<(), TableauError> {
        let outer = self.outer_lengths();
        if !outer.windows(2).all(|w| w[0] >= w[1]) || !self.inner.windows(2).all(|w| w[0] >= w[1]) {
            return Err(TableauError::BadShape);
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(TableauError::ZeroLetter);
            }
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return Err(TableauError::RowNotWeak { row: r });
            }
            if r == 0 {
                continue;
            }
            for (k, &x) in row.iter().enumerate() {
                let col = self.inner[r] + k;
                if let Some(below) = self.get(r - 1, col) {
                    if below >= x {
                        return Err(TableauError::ColumnNotStrict { row: r, col });
                    }
                }
            }
        }
        Ok(())
    }

    fn outer_lengths(&self) -> Vec<usize> {
        self.rows
            .iter()
            .zip(&self.inner)
            .map(|(row, &i)| i + row.len())
            .collect()
    }

    /// Entry at row `r`, absolute column `c`, if that cell is filled.
    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        let row = self.rows.get(r)?;
        let off = self.inner[r];
        (c >= off).then(|| row.get(c - off).copied()).flatten()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn inner_offsets(&self) -> &[usize] {
        &self.inner
    }

    pub fn shape(&self) -> Partition {
        Partition::from_padded(self.outer_lengths()).expect("validated shape")
    }

    pub fn inner_shape(&self) -> Partition {
        Partition::from_padded(self.inner.clone()).expect("validated shape")
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&i| i == 0)
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows read from the top row down, each left to right.
    pub fn reading_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Same cells refilled from a reading word.
    pub fn with_reading_word(&self, w: &[usize]) -> Result<Tableau, TableauError> {
        if w.len() != self.size() {
            return Err(TableauError::WordLength { expected: self.size(), got: w.len() });
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        let mut at = w.len();
        for row in &self.rows {
            at -= row.len();
            rows.push(w[at..at + row.len()].to_vec());
        }
        let t = Tableau { inner: self.inner.clone(), rows };
        t.validate()?;
        Ok(t)
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.max_letter()];
        for &x in self.rows.iter().flatten() {
            wt[x - 1] += 1;
        }
        wt
    }

    /// Letters become `1..=size`, equal letters numbered in reading order left to right.
    pub fn standardize(&self) -> Tableau {
        let std = word::standardize(&self.reading_word());
        self.with_reading_word(&std).expect("standardization keeps the tableau semistandard")
    }

    pub fn is_standard(&self) -> bool {
        word::is_permutation(&self.reading_word())
    }

    /// Applies `f` to every entry.
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Result<Tableau, TableauError> {
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect();
        let t = Tableau { inner: self.inner.clone(), rows };
        t.validate()?;
        Ok(t)
    }

    /// Row index of each letter of a standard tableau: `rows_of()[x]` for `x` in `1..=n`.
    pub fn rows_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.max_letter() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x] = r;
            }
        }
        out
    }

    /// Descent composition of the standardization: `i` is a descent when
    /// `i+1` lies in a strictly higher row than `i`.
    pub fn descent_composition(&self) -> Composition {
        let t = if self.is_standard() { self.clone() } else { self.standardize() };
        let row = t.rows_of();
        let n = t.size();
        let des: Vec<usize> = (1..n).filter(|&i| row[i + 1] > row[i]).collect();
        Composition::from_descent_set(n, &des)
    }

    /// Keeps the cells of a standard tableau whose entries lie in `iv`;
    /// cells with smaller entries become the inner shape.
    pub fn restrict(&self, iv: Interval) -> Result<Tableau, TableauError> {
        if !self.is_standard() {
            return Err(TableauError::NotStandard);
        }
        let mut inner = Vec::with_capacity(self.rows.len());
        let mut rows = Vec::with_capacity(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            let below = row.iter().filter(|&&x| x < iv.lo).count();
            inner.push(self.inner[r] + below);
            rows.push(row.iter().copied().filter(|&x| iv.contains(x)).collect());
        }
        Tableau::skew(inner, rows)
    }

    /// Jeu de taquin rectification to a straight shape.
    pub fn rectify(&self) -> Tableau {
        let mut grid: Vec<Vec<Option<usize>>> = self
            .rows
            .iter()
            .zip(&self.inner)
            .map(|(row, &off)| {
                let mut g = vec![None; off];
                g.extend(row.iter().map(|&x| Some(x)));
                g
            })
            .collect();
        let mut inner = self.inner.clone();
        loop {
            // An inner corner: the last inner cell of a row not covered by the row above.
            let corner = (0..inner.len())
                .rev()
                .find(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r]);
            let Some(r0) = corner else { break };
            let c0 = inner[r0] - 1;
            inner[r0] -= 1;
            let (mut r, mut c) = (r0, c0);
            loop {
                let right = grid[r].get(c + 1).copied().flatten();
                let above = grid
                    .get(r + 1)
                    .and_then(|row| row.get(c).copied().flatten());
                match (right, above) {
                    (None, None) => {
                        grid[r].truncate(c);
                        break;
                    }
                    (Some(x), Some(y)) if x < y => {
                        grid[r][c] = Some(x);
                        c += 1;
                    }
                    (Some(x), None) => {
                        grid[r][c] = Some(x);
                        c += 1;
                    }
                    (_, Some(y)) => {
                        grid[r][c] = Some(y);
                        r += 1;
                    }
                }
            }
        }
        let rows: Vec<Vec<usize>> = grid
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.expect("rectified rows are filled")).collect())
            .collect();
        Tableau::new(rows).expect("jeu de taquin keeps the tableau semistandard")
    }

    /// Rotation by 180° followed by `x ↦ alphabet + 1 - x`.
    pub fn rotate_complement(&self, alphabet: usize) -> Result<Tableau, TableauError> {
        if !self.is_straight() {
            return Err(TableauError::NotStraight);
        }
        let width = self.rows.first().map_or(0, Vec::len);
        let mut inner = Vec::with_capacity(self.rows.len());
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in self.rows.iter().rev() {
            inner.push(width - row.len());
            rows.push(row.iter().rev().map(|&x| alphabet + 1 - x).collect());
        }
        Tableau::skew(inner, rows)
    }

    /// Schützenberger evacuation over the alphabet `[1, alphabet]`.
    pub fn evacuate_in(&self, alphabet: usize) -> Result<Tableau, TableauError> {
        Ok(self.rotate_complement(alphabet)?.rectify())
    }

    /// Evacuation of a straight tableau over `[1, size]`.
    pub fn evacuate(&self) -> Result<Tableau, TableauError> {
        self.evacuate_in(self.size())
    }

    /// The letters of each row joined, rows separated by `/`, bottom first.
    pub fn compact(&self) -> String {
        let wide = self.max_letter() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect();
        rows.join("/")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = std::iter::repeat_n(".".to_string(), self.inner[r])
                .chain(row.iter().map(|x| x.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
