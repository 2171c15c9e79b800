//! Compression to at most `2k` vertices and the matching lifting.

use std::sync::Arc;

use crate::crown::{nt_decompose, verify_crown, CrownDecomposition, Matching, NtOutcome};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;
use crate::vc::crown_enum::enum_crown;
use crate::vc::instance::CrownedInstance;

/// One rule application recorded during compression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VcTraceEntry {
    /// Rule 1: `v` had no neighbours. `k` is the budget at that point.
    IsolatedRemoved { v: VertexId, k: i64 },
    /// Rule 2: a crown `(C, H)` was removed.
    CrownApplied {
        crown_graph: MultiGraph,
        head: VertexSet,
        crown: VertexSet,
        matching: Matching,
        head_body_edges: Vec<(VertexId, VertexId)>,
        k_before: i64,
        k_after: i64,
    },
}

pub type VcTrace = Vec<VcTraceEntry>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcKernel {
    pub graph: MultiGraph,
    pub k: i64,
    pub trace: VcTrace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VcCompression {
    NoInstance,
    Kernel(VcKernel),
}

/// Removes the least isolated vertex, if there is one.
pub fn vc_rule_isolated(g: &mut MultiGraph, k: i64) -> Option<VcTraceEntry> {
    let v = g.vertices().find(|v| g.degree(*v) == 0)?;
    g.remove_vertex(v);
    Some(VcTraceEntry::IsolatedRemoved { v, k })
}

/// Removes `H ∪ C` of a verified crown decomposition; returns the new budget.
pub fn vc_rule_crown(
    g: &mut MultiGraph,
    k: i64,
    d: &CrownDecomposition,
) -> Result<(i64, VcTraceEntry)> {
    if !verify_crown(g, d) {
        return Err(Error::usage("not a crown decomposition of this graph"));
    }
    if d.head.len() as i64 > k {
        return Err(Error::usage("crown head exceeds the budget"));
    }
    let hc: VertexSet = d.head.union(&d.crown).copied().collect();
    let crown_graph = g.induced(&hc);
    let mut head_body_edges = Vec::new();
    for h in &d.head {
        for b in g.neighbors(*h) {
            if d.body.contains(&b) {
                head_body_edges.push((*h, b));
            }
        }
    }
    g.remove_vertices(&hc);
    let k_after = k - d.head.len() as i64;
    Ok((
        k_after,
        VcTraceEntry::CrownApplied {
            crown_graph,
            head: d.head.clone(),
            crown: d.crown.clone(),
            matching: d.matching.clone(),
            head_body_edges,
            k_before: k,
            k_after,
        },
    ))
}

/// Exhaustive application of both rules until at most `2k` vertices remain.
pub fn vc_compress(g: &MultiGraph, k: i64) -> Result<VcCompression> {
    if !g.is_simple() {
        return Err(Error::usage(
            "vertex cover compression needs a simple graph (no loops or parallel edges)",
        ));
    }
    if k < 0 {
        return Ok(VcCompression::NoInstance);
    }
    let mut g = g.clone();
    let mut k = k;
    let mut trace = Vec::new();
    loop {
        while let Some(e) = vc_rule_isolated(&mut g, k) {
            trace.push(e);
        }
        if g.vertex_count() as i64 <= 2 * k {
            return Ok(VcCompression::Kernel(VcKernel { graph: g, k, trace }));
        }
        match nt_decompose(&g, k)? {
            NtOutcome::NoHalfIntegralCover { .. } => return Ok(VcCompression::NoInstance),
            NtOutcome::Crown { decomposition, .. } => {
                let (k_after, entry) = vc_rule_crown(&mut g, k, &decomposition)?;
                trace.push(entry);
                k = k_after;
            }
        }
    }
}

/// Solutions of the pre-rule graph that extend `s` (a solution after the rule).
pub fn vc_lift_entry(entry: &VcTraceEntry, s: &VertexSet) -> SolutionStream {
    match entry {
        VcTraceEntry::IsolatedRemoved { v, k } => {
            let mut with = s.clone();
            with.insert(*v);
            if (s.len() as i64) < *k {
                SolutionStream::new([s.clone(), with].into_iter())
            } else {
                SolutionStream::once(s.clone())
            }
        }
        VcTraceEntry::CrownApplied {
            crown_graph,
            head,
            crown,
            matching,
            head_body_edges,
            k_after,
            ..
        } => {
            let slack = (*k_after - s.len() as i64).max(0) as usize;
            let forced: VertexSet = head_body_edges
                .iter()
                .filter(|(_, b)| !s.contains(b))
                .map(|(h, _)| *h)
                .collect();
            let free_head: VertexSet = head.difference(&forced).copied().collect();
            let keep: VertexSet = free_head.union(crown).copied().collect();
            let sub = CrownedInstance {
                graph: crown_graph.induced(&keep),
                head: free_head.clone(),
                crown: crown.clone(),
                matching: matching.restricted(&keep),
                slack: 0,
            };
            let mut base = s.clone();
            base.extend(forced);
            let top = slack.min(crown.len());
            SolutionStream::new((0..=top).flat_map(move |l| {
                let inst = CrownedInstance {
                    slack: l,
                    ..sub.clone()
                };
                let base = base.clone();
                enum_crown(&inst).map(move |t| {
                    let mut out = base.clone();
                    out.extend(t);
                    out
                })
            }))
        }
    }
}

/// Lifts a kernel solution through the whole trace, most recent rule first.
pub fn vc_lift(trace: Arc<VcTrace>, s: VertexSet) -> SolutionStream {
    let n = trace.len();
    lift_from(trace, n, s)
}

fn lift_from(trace: Arc<VcTrace>, remaining: usize, s: VertexSet) -> SolutionStream {
    if remaining == 0 {
        return SolutionStream::once(s);
    }
    let lifted = vc_lift_entry(&trace[remaining - 1], &s);
    SolutionStream::new(lifted.flat_map(move |t| lift_from(trace.clone(), remaining - 1, t)))
}
