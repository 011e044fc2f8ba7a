use std::fmt;
use std::str::FromStr;

use cskit_crystal::Cycle;
use cskit_tableaux::Interval;

/// How an edge changes the number of parts of the descent composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Preserving,
    Increasing,
    Decreasing,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Preserving, EdgeKind::Increasing, EdgeKind::Decreasing];

    /// The kind whose length change is `delta`.
    pub fn from_length_change(delta: isize) -> Option<EdgeKind> {
        match delta {
            0 => Some(EdgeKind::Preserving),
            1 => Some(EdgeKind::Increasing),
            -1 => Some(EdgeKind::Decreasing),
            _ => None,
        }
    }

    pub fn length_change(self) -> isize {
        match self {
            EdgeKind::Preserving => 0,
            EdgeKind::Increasing => 1,
            EdgeKind::Decreasing => -1,
        }
    }

    /// Swaps increasing and decreasing.
    pub fn opposite(self) -> EdgeKind {
        match self {
            EdgeKind::Preserving => EdgeKind::Preserving,
            EdgeKind::Increasing => EdgeKind::Decreasing,
            EdgeKind::Decreasing => EdgeKind::Increasing,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Preserving => "PRESERVING",
            EdgeKind::Increasing => "INCREASING",
            EdgeKind::Decreasing => "DECREASING",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "PRESERVING" | "P" => Ok(EdgeKind::Preserving),
            "INCREASING" | "I" => Ok(EdgeKind::Increasing),
            "DECREASING" | "D" => Ok(EdgeKind::Decreasing),
            _ => Err(format!("unknown edge type {s:?}")),
        }
    }
}

/// An edge of a crystal skeleton between vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkeletonEdge {
    pub src: usize,
    pub interval: Interval,
    pub dst: usize,
    pub cycle: Cycle,
    pub kind: EdgeKind,
}
