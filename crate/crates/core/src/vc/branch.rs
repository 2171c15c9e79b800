//! Enumeration of all covers of size at most `k` on the kernel itself.

use std::sync::Arc;

use crate::crown::half_integral_optimum;
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;
use crate::subsets::subsets_up_to;

struct Node {
    included: VertexSet,
    excluded: VertexSet,
}

/// Ordered edge branching with exclusion marks.
///
/// On the least uncovered edge `uv` the first branch takes `u`, the second
/// excludes `u` (forcing all of its neighbours). A branch is cut when the
/// half-integral bound of the undecided part exceeds the remaining budget.
struct EdgeBranching {
    graph: Arc<MultiGraph>,
    k: i64,
    stack: Vec<Node>,
    leaf: Option<Box<dyn Iterator<Item = VertexSet> + Send>>,
}

impl EdgeBranching {
    fn undecided(&self, node: &Node) -> VertexSet {
        self.graph
            .vertices()
            .filter(|v| !node.included.contains(v) && !node.excluded.contains(v))
            .collect()
    }

    fn first_uncovered_edge(&self, undecided: &VertexSet) -> Option<(VertexId, VertexId)> {
        for u in undecided {
            if let Some(v) = self
                .graph
                .neighbors(*u)
                .find(|w| w > u && undecided.contains(w))
            {
                return Some((*u, v));
            }
        }
        None
    }

    fn feasible(&self, node: &Node, undecided: &VertexSet) -> bool {
        let budget = self.k - node.included.len() as i64;
        if budget < 0 {
            return false;
        }
        let rest = self.graph.induced(undecided);
        let halves = half_integral_optimum(&rest).weight_halves() as i64;
        (halves + 1) / 2 <= budget
    }

    fn exclude(&self, node: &Node, u: VertexId) -> Option<Node> {
        let mut child = Node {
            included: node.included.clone(),
            excluded: node.excluded.clone(),
        };
        child.excluded.insert(u);
        for w in self.graph.neighbors(u) {
            if child.excluded.contains(&w) {
                return None;
            }
            child.included.insert(w);
        }
        Some(child)
    }
}

impl Iterator for EdgeBranching {
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
            let undecided = self.undecided(&node);
            if !self.feasible(&node, &undecided) {
                continue;
            }
            match self.first_uncovered_edge(&undecided) {
                None => {
                    let budget = (self.k - node.included.len() as i64) as usize;
                    let base = node.included;
                    let free: Vec<VertexId> = undecided.into_iter().collect();
                    self.leaf = Some(Box::new(subsets_up_to(free, budget).map(move |z| {
                        let mut s = base.clone();
                        s.extend(z);
                        s
                    })));
                }
                Some((u, _)) => {
                    if let Some(child) = self.exclude(&node, u) {
                        self.stack.push(child);
                    }
                    let mut take = node;
                    take.included.insert(u);
                    self.stack.push(take);
                }
            }
        }
    }
}

/// All vertex covers of `g` with at most `k` vertices, each exactly once.
pub fn vc_kernel_solutions(g: &MultiGraph, k: i64) -> SolutionStream {
    if k < 0 {
        return SolutionStream::empty();
    }
    SolutionStream::new(EdgeBranching {
        graph: Arc::new(g.clone()),
        k,
        stack: vec![Node {
            included: VertexSet::new(),
            excluded: VertexSet::new(),
        }],
        leaf: None,
    })
}
