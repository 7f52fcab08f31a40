//! Solvers and verification tools for the Maximum Weighted Budgeted Independent
//! Set (MWBIS) problem: find an independent set of at most `k` vertices with the
//! largest total weight. The degree-weighted special case is Maximum Independent
//! Vertex Coverage (MIVC), where the weight of a set equals the number of edges it
//! covers.
//!
//! The crate is `no_std` (it needs `alloc`). The default `std` feature only adds
//! wall-clock time limits to the exact search.
//!
//! - [`graph`]: graphs, weighted instances, independence and coverage primitives,
//!   bipartition detection, colorings.
//! - [`solvers`]: exact branch-and-bound, the bipartite greedy 1/2-approximation,
//!   its color-class generalisation, bipartite MWIS by minimum cut, and budget
//!   truncation.
//! - [`lp`]: maximal cliques, the clique LP relaxation, a dense simplex solver with
//!   exact rational certification, and integrality gaps.
//! - [`reductions`]: the regular-clique to bipartite MIVC reduction and its
//!   equivalence check.
//! - [`generators`]: tight examples, integrality-gap examples, random regular and
//!   random bipartite instances.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod generators;
pub mod graph;
pub mod lp;
pub mod reductions;
pub mod solvers;

pub use graph::{
    bipartition, covered_edges, degeneracy_order, degree_weights, greedy_coloring, is_independent,
    set_weight, Bipartition, Coloring, Graph, GraphError, Method, OddCycle, Solution, WeightMode,
    WeightedInstance,
};
