//! `Enum Vertex Cover`: all vertex covers of size at most `k`.
//!
//! [`vc_compress`] shrinks the instance to at most `2k` vertices with the
//! isolated-vertex and crown rules; [`vc_enumerate`] enumerates the kernel and
//! lifts every kernel cover back through the recorded trace.

mod branch;
mod crown_enum;
mod instance;
mod kernel;
mod propagate;
mod trace;

use std::sync::Arc;

pub use branch::vc_kernel_solutions;
pub use crown_enum::{enum_crown, enum_small_crown};
pub use instance::CrownedInstance;
pub use kernel::{
    vc_compress, vc_lift, vc_lift_entry, vc_rule_crown, vc_rule_isolated, VcCompression, VcKernel,
    VcTrace, VcTraceEntry,
};
pub use propagate::{prop_avoid, prop_big, prop_x, BigProp, PropResult};
pub use trace::{parse_vc_trace, serialize_vc_trace};

use crate::error::Result;
use crate::graph::MultiGraph;
use crate::stream::SolutionStream;

/// Streams every vertex cover of `g` with at most `k` vertices, once each.
pub fn vc_enumerate(g: &MultiGraph, k: i64) -> Result<SolutionStream> {
    match vc_compress(g, k)? {
        VcCompression::NoInstance => Ok(SolutionStream::empty()),
        VcCompression::Kernel(kernel) => Ok(enumerate_kernel(kernel)),
    }
}

/// Enumerates a compressed instance and lifts each kernel solution.
pub fn enumerate_kernel(kernel: VcKernel) -> SolutionStream {
    let trace = Arc::new(kernel.trace);
    let solutions = vc_kernel_solutions(&kernel.graph, kernel.k);
    SolutionStream::new(solutions.flat_map(move |s| vc_lift(trace.clone(), s)))
}
