//! Enumeration of all feedback vertex sets of size at most `k` on the kernel.

use std::sync::Arc;

use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;
use crate::subsets::subsets_up_to;

struct Node {
    included: VertexSet,
    excluded: VertexSet,
}

/// Ordered cycle branching with exclusion marks.
///
/// On a shortest cycle `v_1, ..., v_t` of `G ∖ included` (in σ order, skipping
/// excluded vertices) branch `j` excludes `v_1, ..., v_{j−1}` and includes
/// `v_j`. Once no cycle is left every subset of the free vertices within the
/// budget is a solution.
struct CycleBranching {
    graph: Arc<MultiGraph>,
    k: i64,
    stack: Vec<Node>,
    leaf: Option<Box<dyn Iterator<Item = VertexSet> + Send>>,
}

impl Iterator for CycleBranching {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(leaf) = self.leaf.as_mut() {
                if let Some(s) = leaf.next() {
                    return Some(s);
                }
                self.leaf = None;
            }
            let node = self.stack.pop()?;
            if node.included.len() as i64 > self.k
                || !self
                    .graph
                    .induced(&node.excluded)
                    .is_forest(&VertexSet::new())
            {
                continue;
            }
            match self.graph.shortest_cycle(&node.included) {
                None => {
                    let budget = (self.k - node.included.len() as i64) as usize;
                    let free: Vec<VertexId> = self
                        .graph
                        .vertices()
                        .filter(|v| !node.included.contains(v) && !node.excluded.contains(v))
                        .collect();
                    let base = node.included;
                    self.leaf = Some(Box::new(subsets_up_to(free, budget).map(move |z| {
                        let mut s = base.clone();
                        s.extend(z);
                        s
                    })));
                }
                Some(cycle) => {
                    let mut members: Vec<VertexId> = cycle
                        .into_iter()
                        .filter(|v| !node.excluded.contains(v))
                        .collect();
                    members.sort();
                    members.dedup();
                    let mut children = Vec::with_capacity(members.len());
                    let mut excluded = node.excluded.clone();
                    for v in members {
                        let mut included = node.included.clone();
                        included.insert(v);
                        children.push(Node {
                            included,
                            excluded: excluded.clone(),
                        });
                        excluded.insert(v);
                    }
                    self.stack.extend(children.into_iter().rev());
                }
            }
        }
    }
}

/// All feedback vertex sets of `g` with at most `k` vertices, each once.
pub fn fvs_kernel_solutions(g: &MultiGraph, k: i64) -> SolutionStream {
    if k < 0 {
        return SolutionStream::empty();
    }
    SolutionStream::new(CycleBranching {
        graph: Arc::new(g.clone()),
        k,
        stack: vec![Node {
            included: VertexSet::new(),
            excluded: VertexSet::new(),
        }],
        leaf: None,
    })
}
