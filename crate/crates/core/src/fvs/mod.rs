//! `Enum Feedback Vertex Set`: all feedback vertex sets of size at most `k`
//! in a multigraph, where loops and double edges count as cycles.
//!
//! [`fvs_compress`] reduces the instance to `O(k³)` vertices with Rules 1
//! to 8 and records a trace; [`fvs_enumerate`] enumerates the kernel and
//! lifts each kernel solution through the trace.

mod approx;
mod aux;
mod branch;
mod flower;
mod kernel;
mod rules;
pub(crate) mod trace;

use std::sync::Arc;

pub use approx::two_approx_fvs;
pub use aux::{build_aux, fvs_rule_aux_double, fvs_rule_edge_delete, AuxBipartite};
pub use branch::fvs_kernel_solutions;
pub use flower::{flower_or_hitting, FlowerResult};
pub use kernel::{degree_cap, fvs_compress, fvs_lift, replay, size_cap, FvsCompression, FvsKernel};
pub use rules::{
    apply_rule, budget_drop, fvs_lift_entry, fvs_rule_basic, fvs_rule_low, fvs_rule_multiflag,
    fvs_rule_pending_doubles, fvs_rule_short_path, fvs_rule_twin_triangle,
};
pub use trace::{parse_trace, serialize_trace, FvsEntry, FvsRule, FvsTrace};

use crate::error::Result;
use crate::graph::{MultiGraph, VertexId};
use crate::stream::SolutionStream;

/// Rule 6 applied at `v`: removes `v` and lowers the budget.
pub fn fvs_rule_flower(g: &mut MultiGraph, k: i64, v: VertexId) -> FvsEntry {
    rules::record(g, k, FvsRule::Flower { v })
}

/// Streams every feedback vertex set of `g` with at most `k` vertices, once
/// each.
pub fn fvs_enumerate(g: &MultiGraph, k: i64) -> Result<SolutionStream> {
    match fvs_compress(g, k)? {
        FvsCompression::NoInstance => Ok(SolutionStream::empty()),
        FvsCompression::Kernel(kernel) => Ok(enumerate_fvs_kernel(kernel)),
    }
}

/// Enumerates a compressed instance and lifts each kernel solution.
pub fn enumerate_fvs_kernel(kernel: FvsKernel) -> SolutionStream {
    let trace = Arc::new(kernel.trace);
    let solutions = fvs_kernel_solutions(&kernel.graph, kernel.k);
    SolutionStream::new(solutions.flat_map(move |s| fvs_lift(trace.clone(), s)))
}
