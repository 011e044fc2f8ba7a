use crate::{Partition, Tableau};

fn sort_by_reading_word(mut ts: Vec<Tableau>) -> Vec<Tableau> {
    ts.sort_by_cached_key(Tableau::reading_word);
    ts
}

/// All standard Young tableaux of shape `shape`, ordered lexicographically by reading word.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], next: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau::new(rows.clone()).expect("valid standard filling"));
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let below_ok = r == 0 || rows[r - 1].len() > len;
            if len < shape[r] && below_ok {
                rows[r].push(next);
                go(shape, next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    go(shape.parts(), 1, shape.size(), &mut rows, &mut out);
    sort_by_reading_word(out)
}

/// All semistandard tableaux of shape `shape` with letters in `[1, alphabet]`,
/// ordered lexicographically by reading word.
pub fn enumerate_ssyt(shape: &Partition, alphabet: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        alphabet: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::new(rows.clone()).expect("valid semistandard filling"));
            return;
        }
        let (r, c) = cells[k];
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let below = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for x in left.max(below)..=alphabet {
            rows[r].push(x);
            go(cells, k + 1, alphabet, rows, out);
            rows[r].pop();
        }
    }
    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    go(&cells, 0, alphabet, &mut rows, &mut out);
    sort_by_reading_word(out)
}

/// Every letter `i > 1` that occurs has an occurrence in a strictly higher row
/// than some occurrence of `i - 1`.
pub fn is_quasi_yamanouchi(t: &Tableau) -> bool {
    let max = t.max_letter();
    let mut lowest = vec![usize::MAX; max + 1];
    let mut highest = vec![None; max + 1];
    for (r, row) in t.rows().iter().enumerate() {
        for &x in row {
            lowest[x] = lowest[x].min(r);
            highest[x] = Some(r);
        }
    }
    (2..=max).all(|i| match (highest[i], lowest[i - 1]) {
        (None, _) => true,
        (Some(hi), lo) => lo != usize::MAX && hi > lo,
    })
}

/// All quasi-Yamanouchi tableaux of shape `shape`, ordered by reading word.
pub fn enumerate_qyt(shape: &Partition) -> Vec<Tableau> {
    enumerate_ssyt(shape, shape.size())
        .into_iter()
        .filter(is_quasi_yamanouchi)
        .collect()
}
