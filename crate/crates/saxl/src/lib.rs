//! Constructive certificates for the positivity of Kronecker coefficients
//! κ(ϱ(n), ϱ(n), ν), where ϱ(n) = (n, n−1, …, 1) is the staircase partition
//! and ν is comparable to ϱ(n) in the dominance order.
//!
//! For each admissible ν the pipeline builds a semistandard filling of ν with
//! content ϱ(n) (constructive Gale-Ryser), converts it into a three-layer
//! hypergraph on the triangular grid Δₙ, and evaluates an exact
//! determinant-product contraction that is nonzero by construction. Every
//! certificate is replayable and is cross-checked against an independent
//! character-theoretic oracle (Murnaghan–Nakayama).
//!
//! Module map:
//! * [`partition`]: partitions, transpose, dominance order, staircases, hooks.
//! * [`tableaux`]: fillings, semistandardness, the Gale-Ryser construction.
//! * [`hypergraph`]: the grid Δₙ and Young hypergraphs.
//! * [`contraction`]: exact determinant products and the symmetrized sum.
//! * [`oracle`]: Kronecker coefficients from symmetric-group characters.
//! * [`certify`]: certificates, verification, and sweeps.
//! * [`cli`]: the `saxl` command-line surface.

pub mod certify;
pub mod cli;
pub mod contraction;
pub mod hypergraph;
pub mod oracle;
pub mod partition;
pub mod tableaux;

pub use certify::{Certificate, SweepReport, Verification};
pub use contraction::ExactScalar;
pub use hypergraph::{TriangularGrid, YoungHypergraph};
pub use oracle::{CharacterCache, CycleType};
pub use partition::Partition;
pub use tableaux::Filling;

/// Errors shared across the crate. Domain preconditions map onto dedicated
/// variants so callers (and the CLI exit-code logic) can tell them apart from
/// internal failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right} boxes")]
    SizeMismatch { left: u64, right: u64 },
    #[error("{what} = {value} exceeds the supported cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("partition {nu} does not dominate the staircase {staircase}")]
    NotDominating { nu: String, staircase: String },
    #[error("partition {nu} is not comparable to the staircase {staircase}")]
    NotComparable { nu: String, staircase: String },
    #[error("partition {0} is not a hook")]
    NotAHook(String),
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
