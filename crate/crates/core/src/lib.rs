//! Polynomial-delay enumeration kernels for `Enum Vertex Cover` and
//! `Enum Feedback Vertex Set`.
//!
//! Both kernels follow the same two-part contract: a *compression* step that
//! reduces `(G, k)` to a small equivalent instance while recording every rule
//! application in a trace, and a *lifting* step that turns each solution of the
//! reduced instance into a non-empty, pairwise disjoint family of solutions of
//! the original instance. Streams are pull-based, so solutions are produced one
//! at a time with bounded work between consecutive outputs.
//!
//! * [`graph`] holds the multigraph carrier shared by both problems.
//! * [`crown`] implements bipartite matching, Kőnig covers and the
//!   half-integral (Nemhauser–Trotter) crown decomposition.
//! * [`vc`] is the `2k`-vertex vertex cover kernel with its crown enumerators.
//! * [`fvs`] is the `O(k³)`-vertex feedback vertex set kernel.
//! * [`oracle`] contains brute-force ground truth used by the test suites.

pub mod crown;
pub mod error;
pub mod fvs;
pub mod graph;
pub mod oracle;
pub mod steps;
pub mod stream;
pub mod subsets;
pub mod vc;

pub use error::{Error, Result};
pub use graph::{MultiGraph, RandomSpec, VertexId, VertexSet};
pub use stream::SolutionStream;
