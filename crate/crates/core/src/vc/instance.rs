use crate::crown::Matching;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};

/// A crowned graph `G = (H ∪ C, E)` with an `H`-saturating matching into the
/// independent crown `C`, together with the slack `x`: the target covers have
/// exactly `|H| + x` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrownedInstance {
    pub graph: MultiGraph,
    pub head: VertexSet,
    pub crown: VertexSet,
    pub matching: Matching,
    pub slack: usize,
}

impl CrownedInstance {
    pub fn new(
        graph: MultiGraph,
        head: VertexSet,
        crown: VertexSet,
        matching: Matching,
        slack: usize,
    ) -> Result<Self> {
        let inst = CrownedInstance {
            graph,
            head,
            crown,
            matching,
            slack,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Small instance (`|H| = |C|`, zero slack) on `n` disjoint matching edges
    /// `i – (n + i)` plus the given extra edges.
    pub fn small_from_edges(n: u32, extra: &[(u32, u32)]) -> Result<Self> {
        let mut g = MultiGraph::with_vertices(2 * n);
        let mut m = Matching::new();
        for i in 1..=n {
            g.add_edge(crate::VertexId(i), crate::VertexId(n + i), 1);
            m.insert(crate::VertexId(i), crate::VertexId(n + i))?;
        }
        for &(u, v) in extra {
            g.add_edge(crate::VertexId(u), crate::VertexId(v), 1);
        }
        let head = (1..=n).map(crate::VertexId).collect();
        let crown = (n + 1..=2 * n).map(crate::VertexId).collect();
        CrownedInstance::new(g, head, crown, m, 0)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Structure(m.to_string()));
        if !self.graph.is_simple() {
            return bad("crowned instances must be simple");
        }
        if !self.head.is_disjoint(&self.crown) {
            return bad("head and crown overlap");
        }
        let all = self.graph.vertex_set();
        if self.head.union(&self.crown).copied().collect::<VertexSet>() != all {
            return bad("head and crown must cover the vertex set");
        }
        if !self.graph.is_independent(&self.crown) {
            return bad("crown is not independent");
        }
        if self.matching.len() != self.head.len() {
            return bad("matching does not saturate the head");
        }
        for h in &self.head {
            match self.matching.mate(*h) {
                Some(c) if self.crown.contains(&c) && self.graph.adjacent(*h, c) => {}
                _ => return bad("matching pair leaves the head-crown edges"),
            }
        }
        if self.slack > self.crown.len() {
            return bad("slack exceeds the crown size");
        }
        Ok(())
    }

    /// `|H| = |C|` and zero slack.
    pub fn is_small(&self) -> bool {
        self.head.len() == self.crown.len() && self.slack == 0
    }

    /// Crown vertices saturated by the matching.
    pub fn matched_crown(&self) -> VertexSet {
        self.matching.image(&self.head)
    }

    pub fn unmatched_crown(&self) -> VertexSet {
        let matched = self.matched_crown();
        self.crown.difference(&matched).copied().collect()
    }

    /// Size of every cover this instance asks for.
    pub fn target_size(&self) -> usize {
        self.head.len() + self.slack
    }
}
