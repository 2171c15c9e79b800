//! The compression driver and the lifting through a recorded trace.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fvs::approx::two_approx_fvs;
use crate::fvs::aux::{build_aux, fvs_rule_aux_double, fvs_rule_edge_delete, AuxBipartite};
use crate::fvs::flower::{flower_or_hitting, FlowerResult};
use crate::fvs::rules::{apply_rule, fvs_lift_entry, low_from, record};
use crate::fvs::trace::{FvsEntry, FvsRule, FvsTrace};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsKernel {
    pub graph: MultiGraph,
    pub k: i64,
    pub trace: FvsTrace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FvsCompression {
    NoInstance,
    Kernel(FvsKernel),
}

impl FvsCompression {
    pub fn kernel(&self) -> Option<&FvsKernel> {
        match self {
            FvsCompression::Kernel(k) => Some(k),
            FvsCompression::NoInstance => None,
        }
    }
}

/// Maximum degree left after exhaustive reduction: `3k(k + 1) + 5k`.
pub fn degree_cap(k: i64) -> i64 {
    3 * k * (k + 1) + 5 * k
}

/// Vertex bound of the kernel: `3k³ + 8k²`.
pub fn size_cap(k: i64) -> i64 {
    3 * k * k * k + 8 * k * k
}

/// Lexicographic termination measure; every rule application decreases it.
fn potential(g: &MultiGraph) -> (usize, i64, u64) {
    let doubles = g
        .edges()
        .iter()
        .filter(|(u, v, m)| u != v && *m >= 2)
        .count();
    (g.vertex_count(), -(doubles as i64), g.total_multiplicity())
}

struct Driver {
    graph: MultiGraph,
    k: i64,
    trace: FvsTrace,
    measure: (usize, i64, u64),
}

impl Driver {
    fn push(&mut self, entry: FvsEntry) -> Result<()> {
        let next = potential(&self.graph);
        if next >= self.measure {
            return Err(Error::internal(format!(
                "rule `{}` did not decrease the termination measure",
                entry.rule.tag()
            )));
        }
        self.measure = next;
        self.k = entry.k_after;
        self.trace.push(entry);
        Ok(())
    }

    /// One phase of Rules 7 and 8 at `v` with `H_v` fixed.
    fn aux_phase(&mut self, v: VertexId, head: &VertexSet) -> Result<()> {
        let mut aux = build_aux(&self.graph, v, head, self.k)?;
        let mut applied = 0;
        loop {
            let entry = fvs_rule_aux_double(&mut self.graph, self.k, &aux)
                .or_else(|| fvs_rule_edge_delete(&mut self.graph, self.k, &aux));
            let Some(entry) = entry else { break };
            self.push(entry)?;
            applied += 1;
            aux = AuxBipartite::from_hitting_set(&self.graph, v, head);
        }
        if applied == 0 {
            return Err(Error::internal(format!(
                "neither auxiliary rule applies at vertex {v} of degree {}",
                self.graph.degree(v)
            )));
        }
        Ok(())
    }

    /// Runs to quiescence; `false` means a NO-instance was detected.
    fn run(&mut self) -> Result<bool> {
        let mut resume = VertexId(0);
        loop {
            if self.k < 0 {
                return Ok(false);
            }
            if let Some(entry) = low_from(&mut self.graph, self.k, resume) {
                resume = match entry.rule {
                    FvsRule::CommonNeighbors { u, .. } => u,
                    _ => VertexId(0),
                };
                self.push(entry)?;
                continue;
            }
            resume = VertexId(0);
            let cap = degree_cap(self.k);
            let high = self
                .graph
                .vertices()
                .find(|v| self.graph.degree(*v) as i64 > cap);
            let approx = two_approx_fvs(&self.graph);
            if approx.len() as i64 > 2 * self.k {
                return Ok(false);
            }
            let Some(v) = high else { return Ok(true) };
            match flower_or_hitting(&self.graph, &approx, v, self.k)? {
                FlowerResult::NoInstance => return Ok(false),
                FlowerResult::Flower(_) => {
                    let entry = record(&mut self.graph, self.k, FvsRule::Flower { v });
                    self.push(entry)?;
                }
                FlowerResult::HittingSet(head) => self.aux_phase(v, &head)?,
            }
        }
    }
}

/// Exhaustive application of Rules 1 to 8 followed by the size test.
///
/// A 2-approximate solution larger than `2k` also answers NO. The size test
/// uses `fvs ≥ |V| / (3Δ − 3)` with the actual maximum degree
/// `Δ` of the reduced graph.
pub fn fvs_compress(g: &MultiGraph, k: i64) -> Result<FvsCompression> {
    let mut driver = Driver {
        graph: g.clone(),
        k,
        trace: Vec::new(),
        measure: potential(g),
    };
    if !driver.run()? {
        return Ok(FvsCompression::NoInstance);
    }
    let Driver {
        graph, k, trace, ..
    } = driver;
    if !graph.is_empty() {
        let delta = graph.max_degree() as i64;
        if graph.vertex_count() as i64 > k * (3 * delta - 3) {
            return Ok(FvsCompression::NoInstance);
        }
    }
    Ok(FvsCompression::Kernel(FvsKernel { graph, k, trace }))
}

/// Replays a trace on `g`, returning the reduced graph.
pub fn replay(g: &MultiGraph, trace: &[FvsEntry]) -> MultiGraph {
    let mut out = g.clone();
    for e in trace {
        apply_rule(&mut out, &e.rule);
    }
    out
}

/// Lifts a kernel solution through the whole trace, most recent rule first.
pub fn fvs_lift(trace: Arc<FvsTrace>, s: VertexSet) -> SolutionStream {
    let n = trace.len();
    lift_from(trace, n, s)
}

fn lift_from(trace: Arc<FvsTrace>, remaining: usize, s: VertexSet) -> SolutionStream {
    if remaining == 0 {
        return SolutionStream::once(s);
    }
    let lifted = fvs_lift_entry(&trace[remaining - 1], &s);
    SolutionStream::new(lifted.flat_map(move |t| lift_from(trace.clone(), remaining - 1, t)))
}
