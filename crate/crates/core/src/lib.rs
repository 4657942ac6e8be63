//! Recognition of induced subgraphs of Johnson graphs.
//!
//! The Johnson graph J(m, N) has the m-subsets of {1..N} as vertices, two
//! subsets being adjacent iff they share exactly m-1 elements. A graph is
//! JIS if it is isomorphic to an induced subgraph of some Johnson graph.
//! This crate decides that property for small graphs, producing either a
//! verifiable set-family certificate or a refutation, together with the
//! surrounding machinery: necessary-condition filters, constructive
//! realizers for standard families, JIS-diameter, and the edge-move
//! distance constructions.

pub mod census;
pub mod cliques;
pub mod edge_move;
pub mod filters;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod named;
pub mod realization;
pub mod recognizer;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{Graph, Removal, TwoCore, VertexId};
pub use realization::{Certificate, SetFamily, VerifyReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 encodes orders up to 62, got {0}")]
    Graph6Order(usize),

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("{what} must be at least {min}, got {got}")]
    ParameterTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("family `{family}` takes {expected} parameter(s)")]
    WrongParameterCount {
        family: &'static str,
        expected: usize,
    },

    #[error("ground set size {size} exceeds the supported maximum {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("invalid set family: {0}")]
    Family(String),

    #[error("family has {sets} sets but the graph has order {order}")]
    FamilyOrderMismatch { sets: usize, order: usize },

    #[error("set size 0 cannot realize a graph of order {0}: sets could not be distinct")]
    ZeroSetSize(usize),

    #[error("neighbor index {neighbor} out of range for a family of {len} sets")]
    NeighborOutOfRange { neighbor: usize, len: usize },

    #[error("combine_components requires at least one part")]
    NoParts,

    #[error("constructed family failed verification: {0}")]
    ConstructionUnsound(String),

    #[error("edge move distance needs equal order and size: ({order_g}, {size_g}) vs ({order_h}, {size_h})")]
    EmdShapeMismatch {
        order_g: usize,
        size_g: usize,
        order_h: usize,
        size_h: usize,
    },

    #[error("distance graph members {0} and {1} are isomorphic")]
    IsomorphicMembers(usize, usize),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not JIS")]
    NotJis,

    #[error("search budget exhausted before a decision was reached")]
    Undecided,

    #[error("brute force oracle accepts orders up to 5, got {0}")]
    OracleOrder(usize),
}
