//! Streaming enumerators for the covers of crowned graphs.

use std::sync::Arc;

use itertools::Itertools;

use crate::crown::Matching;
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;
use crate::vc::instance::CrownedInstance;
use crate::vc::propagate::{prop_big_unchecked, View};

struct Frame {
    alive: VertexSet,
    acc: VertexSet,
    tried_include: bool,
}

/// Depth-first branching over a small crowned residual. Every branch it
/// enters yields at least one cover, so the delay is polynomial.
pub(crate) struct SmallCrownIter {
    graph: Arc<MultiGraph>,
    matching: Arc<Matching>,
    head: Arc<VertexSet>,
    stack: Vec<Frame>,
}

impl SmallCrownIter {
    pub(crate) fn start(
        graph: Arc<MultiGraph>,
        matching: Arc<Matching>,
        head: Arc<VertexSet>,
        alive: VertexSet,
        acc: VertexSet,
    ) -> Self {
        SmallCrownIter {
            graph,
            matching,
            head,
            stack: vec![Frame {
                alive,
                acc,
                tried_include: false,
            }],
        }
    }
}

impl Iterator for SmallCrownIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(mut frame) = self.stack.pop() {
            let Some(v) = frame.alive.iter().copied().find(|u| self.head.contains(u)) else {
                return Some(frame.acc);
            };
            let view = View {
                graph: &self.graph,
                matching: &self.matching,
                head: &self.head,
                alive: &frame.alive,
            };
            let r = if frame.tried_include {
                view.prop_avoid(v)
            } else {
                view.prop_x(&VertexSet::from([v]))
            };
            let child = (!r.failed).then(|| {
                let alive = frame
                    .alive
                    .iter()
                    .filter(|u| !r.forced.contains(u) && !r.forbidden.contains(u))
                    .copied()
                    .collect();
                let mut acc = frame.acc.clone();
                acc.extend(r.forced.iter().copied());
                Frame {
                    alive,
                    acc,
                    tried_include: false,
                }
            });
            if !frame.tried_include {
                frame.tried_include = true;
                self.stack.push(frame);
            }
            if let Some(child) = child {
                self.stack.push(child);
            }
        }
        None
    }
}

/// Every vertex cover of size exactly `|H|` of a small crowned instance.
///
/// The branch vertex is the least live head vertex; the branch containing it
/// is explored before the branch avoiding it.
pub fn enum_small_crown(inst: &CrownedInstance) -> SolutionStream {
    let alive = inst.graph.vertex_set();
    SolutionStream::new(SmallCrownIter::start(
        Arc::new(inst.graph.clone()),
        Arc::new(inst.matching.clone()),
        Arc::new(inst.head.clone()),
        alive,
        VertexSet::new(),
    ))
}

/// Every vertex cover of size exactly `|H| + x` of a crowned instance.
///
/// Signatures are visited with `|C1|` ascending and, within one size, in
/// lexicographic order of `C1` then `C2`.
pub fn enum_crown(inst: &CrownedInstance) -> SolutionStream {
    let inst = Arc::new(inst.clone());
    let graph = Arc::new(inst.graph.clone());
    let matching = Arc::new(inst.matching.clone());
    let head = Arc::new(inst.head.clone());
    let matched: Vec<VertexId> = inst.matched_crown().into_iter().collect();
    let unmatched_set = inst.unmatched_crown();
    let unmatched: Vec<VertexId> = unmatched_set.iter().copied().collect();
    let x = inst.slack;
    let lo = x.saturating_sub(unmatched.len());
    let hi = x.min(matched.len());

    let signatures = (lo..=hi).flat_map(move |d| {
        let unmatched = unmatched.clone();
        matched
            .clone()
            .into_iter()
            .combinations(d)
            .flat_map(move |c1| {
                unmatched
                    .clone()
                    .into_iter()
                    .combinations(x - d)
                    .map(move |c2| (c1.clone(), c2))
            })
    });

    let stream = signatures.flat_map(move |(c1, c2)| {
        let c1: VertexSet = c1.into_iter().collect();
        let c2: VertexSet = c2.into_iter().collect();
        let big = prop_big_unchecked(&inst, &unmatched_set, &c1, &c2);
        let free_crown = inst.matching.image(&big.free_head);
        let alive: VertexSet = big
            .free_head
            .iter()
            .chain(free_crown.iter())
            .filter(|u| !big.forced.contains(u) && !big.forbidden.contains(u))
            .copied()
            .collect();
        let mut acc = c1.clone();
        acc.extend(inst.matching.image(&c1));
        acc.extend(c2);
        acc.extend(big.forced);
        SmallCrownIter::start(graph.clone(), matching.clone(), head.clone(), alive, acc)
    });
    SolutionStream::new(stream)
}
