use cskit_tableaux::{Tableau, Word};

use crate::BracketState;

pub fn f_word(w: &[usize], i: usize) -> Option<Word> {
    let p = BracketState::new(w, i).p()?;
    let mut out = w.to_vec();
    out[p] = i + 1;
    Some(out)
}

pub fn e_word(w: &[usize], i: usize) -> Option<Word> {
    let q = BracketState::new(w, i).q()?;
    let mut out = w.to_vec();
    out[q] = i;
    Some(out)
}

pub fn phi_word(w: &[usize], i: usize) -> usize {
    BracketState::new(w, i).free_i.len()
}

pub fn eps_word(w: &[usize], i: usize) -> usize {
    BracketState::new(w, i).free_next.len()
}

/// `f_i` on a tableau, acting on its reading word.
pub fn f(b: &Tableau, i: usize) -> Option<Tableau> {
    let w = f_word(&b.reading_word(), i)?;
    Some(b.with_reading_word(&w).expect("f_i preserves semistandardness"))
}

pub fn e(b: &Tableau, i: usize) -> Option<Tableau> {
    let w = e_word(&b.reading_word(), i)?;
    Some(b.with_reading_word(&w).expect("e_i preserves semistandardness"))
}

pub fn phi(b: &Tableau, i: usize) -> usize {
    phi_word(&b.reading_word(), i)
}

pub fn eps(b: &Tableau, i: usize) -> usize {
    eps_word(&b.reading_word(), i)
}
