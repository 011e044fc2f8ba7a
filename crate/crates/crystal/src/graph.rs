use std::collections::HashMap;

use cskit_tableaux::{enumerate_ssyt, Partition, Tableau, Word};

use crate::{f, CrystalError};

/// The crystal graph `B(λ)_n` on semistandard tableaux of shape `λ` over `[1, n]`.
///
/// Vertex ids follow the lexicographic order of reading words.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    shape: Partition,
    n: usize,
    vertices: Vec<Tableau>,
    index: HashMap<Word, usize>,
    /// `f_table[v][i-1]` is the target of the `f_i` edge out of `v`.
    f_table: Vec<Vec<Option<usize>>>,
    e_table: Vec<Vec<Option<usize>>>,
    highest: usize,
    lowest: usize,
}

pub fn build_crystal(shape: &Partition, n: usize) -> Result<CrystalGraph, CrystalError> {
    if n < shape.len() || n == 0 {
        return Err(CrystalError::AlphabetTooSmall { n, rows: shape.len() });
    }
    let vertices = enumerate_ssyt(shape, n);
    let index: HashMap<Word, usize> =
        vertices.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
    let ops = n - 1;
    let mut f_table = vec![vec![None; ops]; vertices.len()];
    let mut e_table = vec![vec![None; ops]; vertices.len()];
    for (v, t) in vertices.iter().enumerate() {
        for i in 1..n {
            if let Some(ft) = f(t, i) {
                let w = index[&ft.reading_word()];
                f_table[v][i - 1] = Some(w);
                e_table[w][i - 1] = Some(v);
            }
        }
    }
    let source = |table: &Vec<Vec<Option<usize>>>| {
        (0..vertices.len())
            .find(|&v| table[v].iter().all(Option::is_none))
            .expect("a finite crystal has extremal vertices")
    };
    let highest = source(&e_table);
    let lowest = source(&f_table);
    Ok(CrystalGraph { shape: shape.clone(), n, vertices, index, f_table, e_table, highest, lowest })
}

impl CrystalGraph {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Size of the alphabet.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn id_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&t.reading_word()).copied()
    }

    pub fn weight(&self, v: usize) -> Vec<usize> {
        let mut wt = self.vertices[v].weight();
        wt.resize(self.n, 0);
        wt
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.f_table[v][i - 1]
    }

    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.e_table[v][i - 1]
    }

    pub fn f_table(&self) -> &[Vec<Option<usize>>] {
        &self.f_table
    }

    /// Edges `(source, i, target)` for `f_i`, by source then `i`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (v, row) in self.f_table.iter().enumerate() {
            for (k, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    out.push((v, k + 1, *t));
                }
            }
        }
        out
    }

    /// The highest weight vertex `u_λ`.
    pub fn highest(&self) -> usize {
        self.highest
    }

    /// The lowest weight vertex `v_λ`.
    pub fn lowest(&self) -> usize {
        self.lowest
    }

    /// `φ_i` by walking the `i`-string.
    pub fn phi(&self, v: usize, i: usize) -> usize {
        string_len(&self.f_table, v, i)
    }

    pub fn eps(&self, v: usize, i: usize) -> usize {
        string_len(&self.e_table, v, i)
    }
}

pub(crate) fn string_len(table: &[Vec<Option<usize>>], v: usize, i: usize) -> usize {
    let mut k = 0;
    let mut cur = v;
    while let Some(next) = table[cur].get(i - 1).copied().flatten() {
        k += 1;
        cur = next;
        if k > table.len() {
            break;
        }
    }
    k
}
