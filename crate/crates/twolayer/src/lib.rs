//! Two-layer grid drawings of bounded-degree graphs.
//!
//! Every graph of maximum degree four splits into two edge layers that share
//! one vertex placement, each layer drawable without crossings. This crate
//! implements the whole pipeline:
//!
//! * [`decompose`] - edge partitions: two linear forests for degree <= 3,
//!   two unions of paths and cycles (via an Euler tour) for degree <= 4.
//! * [`embed`] - the simultaneous grid embeddings: straight-line placements
//!   for two spanning paths, for two cycle forests, and an orthogonal
//!   one-bend variant that always fits an n-by-n grid.
//! * [`verify`] - an independent exact-arithmetic checker for everything the
//!   embedders claim (layer validity, crossing freedom, grid bounds).
//! * [`formats`] - edge-list / graph6 / GraphML input, JSON layout documents
//!   and SVG output.
//!
//! Coordinates are arbitrary-precision integers throughout; straight-line
//! embeddings of cycle forests can stretch the grid far beyond what doubles
//! represent, and the verifier has to stay exact.
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability, or the `twolayer` binary for the command-line pipeline.

pub mod decompose;
pub mod embed;
pub mod formats;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod instances;
pub mod verify;

pub use embed::{Drawing, DrawingKind, Mode};
pub use graph::Graph;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: u32 },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: u32, v: u32, n: usize },
    #[error("graph is disconnected: vertex {unreached} was never reached")]
    Disconnected { unreached: u32 },
    #[error("vertex {v} has odd degree; an Euler tour needs all degrees even")]
    OddDegree { v: u32 },
    #[error("vertex {v} has degree {degree}, above the limit {limit} for this mode")]
    DegreeExceeded { v: u32, degree: usize, limit: usize },
    #[error("zero-length segment")]
    DegenerateSegment,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("no placement for the shared start vertex satisfies all visibility wedges: {0}")]
    WedgeSearchFailed(String),
}
