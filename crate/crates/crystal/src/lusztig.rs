use crate::CrystalGraph;

/// The Lusztig involution on a crystal graph, realized by evacuation over `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LusztigMap {
    /// `image[v]` is the id of `L(v)`.
    pub image: Vec<usize>,
    /// Whether every edge `(b, i, b′)` maps to an edge `(L(b′), n−i, L(b))`.
    pub is_anti_automorphism: bool,
}

impl LusztigMap {
    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| self.image[w] == v)
    }
}

pub fn lusztig_crystal(g: &CrystalGraph) -> LusztigMap {
    let n = g.n();
    let image: Vec<usize> = g
        .vertices()
        .iter()
        .map(|t| {
            let ev = t.evacuate_in(n).expect("crystal vertices are straight");
            g.id_of(&ev).expect("evacuation stays in the crystal")
        })
        .collect();
    let is_anti_automorphism = g
        .edges()
        .iter()
        .all(|&(b, i, b2)| g.f(image[b2], n - i) == Some(image[b]));
    LusztigMap { image, is_anti_automorphism }
}
