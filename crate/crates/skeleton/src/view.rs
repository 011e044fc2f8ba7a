use cskit_tableaux::{Composition, Interval};

use crate::EdgeKind;

/// An edge seen through [`EdgeView`]; `kind` is `None` when it could not be determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub src: usize,
    pub interval: Interval,
    pub dst: usize,
    pub kind: Option<EdgeKind>,
}

/// Read access shared by crystal skeletons and abstract labelled graphs.
pub trait EdgeView {
    fn vertex_count(&self) -> usize;

    /// The integer `n` the vertex labels compose.
    fn n(&self) -> usize;

    fn label(&self, v: usize) -> &Composition;

    /// Outgoing edges of `v`, ordered by interval.
    fn outgoing(&self, v: usize) -> Vec<Arrow>;

    /// Incoming edges of `v`, ordered by interval then source.
    fn incoming(&self, v: usize) -> Vec<Arrow>;

    fn arrow_from(&self, v: usize, iv: Interval) -> Option<Arrow> {
        self.outgoing(v).into_iter().find(|a| a.interval == iv)
    }

    fn arrow_between(&self, v: usize, iv: Interval, w: usize) -> Option<Arrow> {
        self.outgoing(v).into_iter().find(|a| a.interval == iv && a.dst == w)
    }

    fn arrows(&self) -> Vec<Arrow> {
        (0..self.vertex_count()).flat_map(|v| self.outgoing(v)).collect()
    }
}
