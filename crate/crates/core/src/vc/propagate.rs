//! The propagation procedures behind the crown enumerators.
//!
//! Each procedure works on a residual view: the live vertices of a crowned
//! instance. Residuals are always unions of matching edges, so a view of a
//! small instance is again a small instance.

use std::collections::VecDeque;

use crate::crown::Matching;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::steps;
use crate::vc::instance::CrownedInstance;

/// Vertices forced into (`forced`) and out of (`forbidden`) every solution.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropResult {
    pub forced: VertexSet,
    pub forbidden: VertexSet,
    pub failed: bool,
}

/// Output of the signature propagation used by the general crown enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigProp {
    pub forced: VertexSet,
    pub forbidden: VertexSet,
    /// Unmatched crown vertices left out by the signature.
    pub excluded_unmatched: VertexSet,
    /// Heads not matched to the chosen doubled crown vertices.
    pub free_head: VertexSet,
}

#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub graph: &'a MultiGraph,
    pub matching: &'a Matching,
    pub head: &'a VertexSet,
    pub alive: &'a VertexSet,
}

#[inline]
fn member(set: &VertexSet, v: &VertexId) -> bool {
    steps::tick();
    set.contains(v)
}

impl View<'_> {
    /// Everything reachable from `x0` when matching edges point from head to
    /// crown and the remaining head–crown edges point back.
    pub fn prop_x(&self, x0: &VertexSet) -> PropResult {
        let mut reached = VertexSet::new();
        let mut queue: VecDeque<VertexId> = VecDeque::new();
        for v in x0 {
            if reached.insert(*v) {
                queue.push_back(*v);
            }
        }
        while let Some(u) = queue.pop_front() {
            if member(self.head, &u) {
                if let Some(c) = self.matching.mate(u) {
                    if member(self.alive, &c) && reached.insert(c) {
                        queue.push_back(c);
                    }
                }
            } else {
                let own = self.matching.mate(u);
                for w in self.graph.neighbors(u) {
                    if Some(w) != own
                        && member(self.alive, &w)
                        && member(self.head, &w)
                        && reached.insert(w)
                    {
                        queue.push_back(w);
                    }
                }
            }
        }
        let (forced, forbidden) = reached.into_iter().partition(|v| self.head.contains(v));
        PropResult {
            forced,
            forbidden,
            failed: false,
        }
    }

    fn live_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in set {
            for w in self.graph.neighbors(*v) {
                if member(self.alive, &w) && !member(set, &w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Consequences of leaving `v` out of a small-crown solution.
    pub fn prop_avoid(&self, v: VertexId) -> PropResult {
        let mut forbidden = VertexSet::from([v]);
        let fail = PropResult {
            forced: VertexSet::new(),
            forbidden: VertexSet::new(),
            failed: true,
        };
        loop {
            let forced = self.live_neighborhood(&forbidden);
            let mut next = VertexSet::new();
            for u in &forced {
                match self.matching.mate(*u) {
                    Some(w) if member(self.alive, &w) => {
                        if member(&forced, &w) {
                            return fail;
                        }
                        next.insert(w);
                    }
                    _ => return fail,
                }
            }
            for u in &next {
                for w in self.graph.neighbors(*u) {
                    if member(&next, &w) {
                        return fail;
                    }
                }
            }
            next.insert(v);
            if next == forbidden {
                return PropResult {
                    forced,
                    forbidden,
                    failed: false,
                };
            }
            forbidden = next;
        }
    }
}

fn full_view<'a>(inst: &'a CrownedInstance, alive: &'a VertexSet) -> View<'a> {
    View {
        graph: &inst.graph,
        matching: &inst.matching,
        head: &inst.head,
        alive,
    }
}

fn require_small(inst: &CrownedInstance) -> Result<()> {
    if inst.is_small() {
        Ok(())
    } else {
        Err(Error::usage("procedure needs a small crowned instance"))
    }
}

/// Forced and forbidden vertices for solutions containing `x0 ⊆ H`.
pub fn prop_x(inst: &CrownedInstance, x0: &VertexSet) -> Result<PropResult> {
    require_small(inst)?;
    if !x0.is_subset(&inst.head) {
        return Err(Error::usage("start set must lie in the head"));
    }
    let alive = inst.graph.vertex_set();
    Ok(full_view(inst, &alive).prop_x(x0))
}

/// Forced and forbidden vertices for solutions avoiding the head vertex `v`,
/// or a failure when no such solution exists.
pub fn prop_avoid(inst: &CrownedInstance, v: VertexId) -> Result<PropResult> {
    require_small(inst)?;
    if !inst.head.contains(&v) {
        return Err(Error::usage(format!("{v} is not a head vertex")));
    }
    let alive = inst.graph.vertex_set();
    Ok(full_view(inst, &alive).prop_avoid(v))
}

/// Propagation of a signature `(C1, C2)`: `C1` are matched crown vertices
/// taken together with their heads, `C2` the unmatched crown vertices taken.
pub fn prop_big(inst: &CrownedInstance, c1: &VertexSet, c2: &VertexSet) -> Result<BigProp> {
    let matched = inst.matched_crown();
    let unmatched = inst.unmatched_crown();
    if !c1.is_subset(&matched) || !c2.is_subset(&unmatched) || c1.len() + c2.len() != inst.slack {
        return Err(Error::usage("invalid signature for this instance"));
    }
    Ok(prop_big_unchecked(inst, &unmatched, c1, c2))
}

pub(crate) fn prop_big_unchecked(
    inst: &CrownedInstance,
    unmatched: &VertexSet,
    c1: &VertexSet,
    c2: &VertexSet,
) -> BigProp {
    let excluded_unmatched: VertexSet = unmatched.difference(c2).copied().collect();
    let doubled_heads = inst.matching.image(c1);
    let free_head: VertexSet = inst.head.difference(&doubled_heads).copied().collect();
    let free_crown = inst.matching.image(&free_head);
    let alive: VertexSet = free_head.union(&free_crown).copied().collect();
    let mut x0 = VertexSet::new();
    for c in &excluded_unmatched {
        for h in inst.graph.neighbors(*c) {
            if member(&free_head, &h) {
                x0.insert(h);
            }
        }
    }
    let r = full_view(inst, &alive).prop_x(&x0);
    BigProp {
        forced: r.forced,
        forbidden: r.forbidden,
        excluded_unmatched,
        free_head,
    }
}
