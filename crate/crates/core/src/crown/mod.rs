//! Bipartite matching, Kőnig covers and half-integral crown decompositions.

mod matching;
mod nt;

pub use matching::{konig_cover, max_bipartite_matching, Matching};
pub use nt::{
    half_integral_optimum, nt_decompose, verify_crown, CrownDecomposition, HalfIntegralSolution,
    NtOutcome,
};
