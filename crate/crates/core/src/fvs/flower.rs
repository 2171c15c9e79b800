//! Flowers at a vertex and the matching small hitting set.
//!
//! With `X` a feedback vertex set, `F = G ∖ (X ∪ {x})` is a forest and every
//! cycle through `x` that avoids `X ∖ {x}` is `x` plus an `A`-path of `F`,
//! where `A = N(x) ∩ V(F)`, or a double edge from `x` into `A`. A greedy pass
//! from the leaves of each tree yields a packing of such paths and a hitting
//! set of the same size.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowerResult {
    NoInstance,
    /// Cycles through `x` pairwise meeting only in `x`.
    Flower(Vec<VertexSet>),
    /// `H_x` with `X ∖ {x} ⊆ H_x`, `x ∉ H_x` and no cycle through `x` in
    /// `G ∖ H_x`.
    HittingSet(VertexSet),
}

/// Greedy `A`-path packing in a forest. Each path comes with the vertex at
/// which it was closed; those vertices form a hitting set.
fn pack_paths(
    forest: &MultiGraph,
    terminals: &VertexSet,
    self_petals: &VertexSet,
) -> Vec<(VertexId, Vec<VertexId>)> {
    let mut paths = Vec::new();
    // next vertex of the open path hanging below `v`; `v` itself at a terminal
    let mut down: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut visited = VertexSet::new();
    for root in forest.vertices() {
        if !visited.insert(root) {
            continue;
        }
        let mut order = Vec::new();
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for w in forest.neighbors(v) {
                if visited.insert(w) {
                    parent.insert(w, v);
                    stack.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            let open: Vec<VertexId> = forest
                .neighbors(v)
                .filter(|c| parent.get(c) == Some(&v) && down.contains_key(c))
                .collect();
            let chain = |from: VertexId| {
                let mut out = vec![from];
                let mut cur = from;
                while down[&cur] != cur {
                    cur = down[&cur];
                    out.push(cur);
                }
                out
            };
            if self_petals.contains(&v) {
                paths.push((v, vec![v]));
            } else if terminals.contains(&v) && !open.is_empty() {
                let mut p = vec![v];
                p.extend(chain(open[0]));
                paths.push((v, p));
            } else if open.len() >= 2 {
                let mut p = chain(open[0]);
                p.reverse();
                p.push(v);
                p.extend(chain(open[1]));
                paths.push((v, p));
            } else if terminals.contains(&v) {
                down.insert(v, v);
            } else if let Some(c) = open.first() {
                down.insert(v, *c);
            }
        }
    }
    paths
}

/// Finds a flower of order `k + 1` at `x` or a hitting set of size at most `3k`
/// for the cycles through `x`.
pub fn flower_or_hitting(
    g: &MultiGraph,
    x_set: &VertexSet,
    x: VertexId,
    k: i64,
) -> Result<FlowerResult> {
    if k < 0 {
        return Ok(FlowerResult::NoInstance);
    }
    if x_set.len() as i64 > 2 * k {
        return Err(Error::usage(format!(
            "approximate solution has {} vertices, more than 2k = {}",
            x_set.len(),
            2 * k
        )));
    }
    if !g.contains(x) {
        return Err(Error::usage(format!("vertex {x} is not in the graph")));
    }
    if g.has_loop(x) {
        return Err(Error::usage(format!("vertex {x} carries a loop")));
    }
    if !g.is_forest(x_set) {
        return Err(Error::usage("given set is not a feedback vertex set"));
    }
    let mut outside: VertexSet = x_set.clone();
    outside.insert(x);
    let forest = g.without(&outside);
    let mut terminals = VertexSet::new();
    let mut self_petals = VertexSet::new();
    for (w, m) in g.neighbor_multiplicities(x) {
        if forest.contains(w) {
            terminals.insert(w);
            if m >= 2 {
                self_petals.insert(w);
            }
        }
    }
    let paths = pack_paths(&forest, &terminals, &self_petals);
    if paths.len() as i64 > k {
        let cycles = paths
            .into_iter()
            .map(|(_, p)| {
                let mut c: VertexSet = p.into_iter().collect();
                c.insert(x);
                c
            })
            .collect();
        return Ok(FlowerResult::Flower(cycles));
    }
    let mut hitting: VertexSet = x_set.iter().copied().filter(|v| *v != x).collect();
    hitting.extend(paths.iter().map(|(top, _)| *top));
    if hitting.len() as i64 > 3 * k {
        return Err(Error::internal(format!(
            "hitting set of size {} exceeds 3k = {}",
            hitting.len(),
            3 * k
        )));
    }
    Ok(FlowerResult::HittingSet(hitting))
}
