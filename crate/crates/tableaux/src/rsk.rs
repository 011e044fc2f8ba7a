use crate::Tableau;

/// Row insertion of `w` from left to right; returns the insertion tableau `P`
/// and the standard recording tableau `Q`.
pub fn rsk(w: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in w.iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    let p = Tableau::new(p).expect("row insertion yields a semistandard tableau");
    let q = Tableau::new(q).expect("recording tableau is standard");
    (p, q)
}

pub fn insertion_tableau(w: &[usize]) -> Tableau {
    rsk(w).0
}

/// `w ≡ v` in the plactic monoid, decided by comparing insertion tableaux.
pub fn knuth_equivalent(w: &[usize], v: &[usize]) -> bool {
    let (mut a, mut b) = (w.to_vec(), v.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b && insertion_tableau(w) == insertion_tableau(v)
}
