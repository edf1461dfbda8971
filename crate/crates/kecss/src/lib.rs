//! Minimum-cost k-edge-connected spanning subgraph (kECSS) toolkit.
//!
//! The pipeline:
//! - a multiplicative-weights LP solver for the kECSS relaxation strengthened
//!   with knapsack-covering inequalities, whose oracle is the minimum
//!   normalized free cut problem solved through weight truncation,
//! - a constrained-cut-preserving sparsifier that shrinks the LP support,
//! - integral rounding via minimum-cost k-arborescences (weighted matroid
//!   intersection) on the bidirected support graph.
//!
//! Brute-force reference oracles (exhaustive free cut, exact small LP,
//! exhaustive IP) live in [`oracles`] and ground every approximation claim.

pub mod dimacs;
pub mod free_cut;
pub mod graph;
pub mod mincut;
pub mod mwu;
pub mod oracles;
pub mod rounding;
pub mod sparsify;

mod flow;
mod matroid;
mod simplex;

use thiserror::Error;

/// Errors shared across the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("cut side must be a proper nonempty vertex subset")]
    InvalidCut,
    #[error("truncation threshold must be positive, got {0}")]
    InvalidThreshold(f64),
    #[error("truncated cut weight {got} is not below k*rho = {bound}")]
    NotBelowThreshold { got: f64, bound: f64 },
    #[error("graph is not connected")]
    InfeasibleGraph,
    #[error("cut has no non-free edges to punish")]
    DegenerateCut,
    #[error("graph is not {0}-edge-connected")]
    Infeasible(u32),
    #[error("punish budget of {0} exceeded; likely numerical pathology")]
    BudgetExceeded(u64),
    #[error("dual bound unavailable: no congestion accumulated")]
    DualUnavailable,
    #[error("instance too large for brute-force oracle: {0}")]
    RefusedScale(String),
    #[error("cost preprocessing dropped every edge")]
    Degenerate,
    #[error("digraph does not contain {0} arc-disjoint spanning arborescences from the root")]
    NotKRootConnected(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
