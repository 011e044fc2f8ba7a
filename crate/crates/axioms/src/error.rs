use cskit_tableaux::Interval;
use thiserror::Error;

/// Reasons a graph is rejected before any axiom is checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("n must be positive")]
    ZeroN,
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} has label {label} which is not a composition of {n}")]
    LabelSize { vertex: usize, label: String, n: usize },
    #[error("edge {edge} has interval {interval} outside [1,{n}]")]
    IntervalRange { edge: usize, interval: Interval, n: usize },
    #[error("edge {edge} has endpoint {vertex} but there are only {count} vertices")]
    Endpoint { edge: usize, vertex: usize, count: usize },
    #[error("vertex {vertex} has no outgoing edge labelled {interval}")]
    NotOutgoing { vertex: usize, interval: Interval },
    #[error("edges {first} and {second} overlap with the first increasing, or nest without the second being the first minus its ends; no commutation case applies")]
    Uncovered { first: Interval, second: Interval },
    #[error("mutation `{0}` does not apply to this graph")]
    BadMutation(String),
    #[error("intervals {first} and {second} must start at different letters")]
    SameStart { first: Interval, second: Interval },
}
