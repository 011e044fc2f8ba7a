use cskit_tableaux::Word;

/// The `(i+1, i)` bracketing of a word.
///
/// Scanning left to right, each `i` is paired with the nearest unpaired `i+1`
/// to its left. The unpaired letters read `i^r (i+1)^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketState {
    pub word: Word,
    pub i: usize,
    /// Positions `(a, b)` with `word[a] = i+1` bracketed with `word[b] = i`, `a < b`.
    pub pairs: Vec<(usize, usize)>,
    /// Positions of unbracketed `i`, increasing.
    pub free_i: Vec<usize>,
    /// Positions of unbracketed `i+1`, increasing.
    pub free_next: Vec<usize>,
}

impl BracketState {
    pub fn new(word: &[usize], i: usize) -> Self {
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        let mut free_i = Vec::new();
        for (pos, &x) in word.iter().enumerate() {
            if x == i + 1 {
                stack.push(pos);
            } else if x == i {
                match stack.pop() {
                    Some(a) => pairs.push((a, pos)),
                    None => free_i.push(pos),
                }
            }
        }
        pairs.sort_unstable();
        BracketState { word: word.to_vec(), i, pairs, free_i, free_next: stack }
    }

    /// Position changed by `f_i`: the rightmost unbracketed `i`.
    pub fn p(&self) -> Option<usize> {
        self.free_i.last().copied()
    }

    /// Position changed by `e_i`: the leftmost unbracketed `i+1`.
    pub fn q(&self) -> Option<usize> {
        self.free_next.first().copied()
    }

    /// Bracketed pairs lying entirely left of `p`.
    pub fn n_left(&self) -> Option<usize> {
        let p = self.p()?;
        Some(self.pairs.iter().filter(|&&(_, b)| b < p).count())
    }

    /// Bracketed pairs lying entirely right of `p`.
    pub fn n_right(&self) -> Option<usize> {
        let p = self.p()?;
        Some(self.pairs.iter().filter(|&&(a, _)| a > p).count())
    }
}
