//! Error type shared across the crate.
//!
//! Errors fall into four rough groups: bad input (vertex ids out of range,
//! malformed trees), capacity (an exponential-time oracle asked to run past
//! its configured bound), broken contracts (a set that had to be a module
//! is not, a merge precondition fails), and internal invariant violations
//! (a guard that should be unreachable fired).

use crate::graph::P4Witness;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A vertex id does not exist in the host graph.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// An edge or edit pair with identical endpoints.
    #[error("self-loop {v}-{v} is not allowed")]
    SelfLoop { v: usize },

    /// The same edge was supplied more than once.
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    /// The graph contains an induced path on four vertices where a cograph
    /// was required.
    #[error("not a cograph: induced path {witness}")]
    NotACograph { witness: P4Witness },

    /// A vertex set that was required to be a module is not one.
    #[error("{0:?} is not a module of the host graph")]
    NotAModule(Vec<usize>),

    /// A block list that was required to partition the vertex set does not.
    #[error("not a partition of the vertex set: {reason}")]
    NotAPartition { reason: String },

    /// A merge was requested on sets that cannot be merged.
    #[error("merge precondition failed: {reason}")]
    MergePrecondition { reason: String },

    /// An edit set was required to preserve the modules of the input graph
    /// but destroys one.
    #[error("edit set does not preserve module {0:?}")]
    NotModulePreserving(Vec<usize>),

    /// An edit set could not be replayed as a sequence of module merges.
    #[error("edit set does not decompose into merges: {reason}")]
    TraceDecomposition { reason: String },

    /// The head of a spider must induce a cograph before the spider can be
    /// edited optimally.
    #[error("spider head is not a cograph: induced path {witness}")]
    SpiderHeadNotCograph { witness: P4Witness },

    /// An exponential-time operation was asked to run beyond its bound.
    #[error("{operation}: input size {actual} exceeds the supported bound {limit}")]
    Capacity {
        operation: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A generator or bench configuration is unusable.
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    /// A serialized tree violates the structural invariants.
    #[error("malformed tree: {reason}")]
    MalformedTree { reason: String },

    /// A guard that should be unreachable fired; this is a bug.
    #[error("internal invariant violated: {reason}")]
    InternalInvariant { reason: String },
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
