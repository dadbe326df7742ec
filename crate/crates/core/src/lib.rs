//! Exact combinatorics of S-hypersimplices.
//!
//! `Δ(d, S)` is the convex hull of all 0/1 vectors of length `d` whose
//! coordinate sum lies in `S ⊆ [0, d]`. Cubes, simplices, hypersimplices,
//! cross-polytopes and halfcubes are all of this form. The crate provides
//!
//! * closed-form vertices, edges, facets, Cayley decompositions and slices
//!   ([`hypersimplex`]),
//! * permutahedra, monotone paths and monotone path polytopes
//!   ([`permutahedra`]),
//! * pulling triangulations, exact volumes and Eulerian-number identities
//!   ([`triangulation`]),
//! * a brute-force exact geometry kernel used to cross-check all of the
//!   above ([`oracle`]).
//!
//! All arithmetic is exact.

pub mod cli;
pub mod format;
pub mod hypersimplex;
pub mod oracle;
pub mod permutahedra;
pub mod subset;
pub mod triangulation;
pub mod verify;

pub use hypersimplex::{CardinalitySet, EdgeKind, EdgeSpec, FacetKind, FacetSpec, SHypersimplex};
pub use oracle::ExactPoint;
pub use permutahedra::{MonotonePath, PermFacet, Permutahedron};
pub use subset::VertexSubset;
pub use triangulation::{PullOrder, TauBPair, Triangulation};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension {0} out of range (supported: 1..=63)")]
    Dimension(usize),
    #[error("invalid cardinality set: {0}")]
    InvalidCardinalitySet(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("cardinality {0} is not a member of S")]
    NotInS(usize),
    #[error("S is not proper: {0}")]
    Improper(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid monotone path: {0}")]
    InvalidPath(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
