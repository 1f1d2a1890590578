//! Kernels by rainbow and properly colored paths in arc-colored digraphs.
//!
//! - [`digraph`]: colored digraphs, tournaments, path witnesses, text and
//!   DOT formats, strongly connected components.
//! - [`reachability`]: rainbow reachability by color-set search, brute-force
//!   path oracles, and the layered properly colored relation.
//! - [`kernels`]: closures, kernel search, and sink peeling for acyclic
//!   digraphs.
//! - [`reductions`]: the 3DPM to rainbow-path and rainbow-path to
//!   rainbow-kernel gadgets, with brute-force verification.
//! - [`generators`], [`checks`], [`explore`]: instances, hypothesis
//!   checkers and counterexample searches.
//!
//! Exhaustive routines are bounded by [`Guards`] and refuse larger inputs
//! with [`Error::GuardExceeded`].

pub mod checks;
pub mod digraph;
pub mod error;
pub mod explore;
pub mod generators;
pub mod guards;
pub mod kernels;
pub mod reachability;
pub mod reductions;
pub mod report;

pub use digraph::{
    parse_digraph, parse_tournament, serialize_digraph, serialize_dot, serialize_tournament,
    validate_tournament, Arc, Color, ColoredDigraph, PathKind, PathWitness, Tournament, Vertex,
};
pub use error::{Error, Result};
pub use guards::Guards;
pub use kernels::{
    pcp_kernel_tournament, rainbow_closure, rainbow_kernel, rainbow_kernel_tournament,
    ClosureDigraph, KernelCertificate,
};
pub use reachability::{pc_closure_layers, rainbow_reachable, LayeredPcRelation};
