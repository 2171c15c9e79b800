//! Rules 1 to 5: detection of the σ-least witness, the graph mutation and the
//! per-rule lifting.
//!
//! σ is the natural order of vertex ids. Each `fvs_rule_*` function mutates the
//! graph in place and returns the recorded entry, or `None` when the rule does
//! not apply.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::fvs::trace::{FvsEntry, FvsRule};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::stream::SolutionStream;
use crate::subsets::subsets_up_to;

/// Applies the mutation recorded by `rule` to `g`.
pub fn apply_rule(g: &mut MultiGraph, rule: &FvsRule) {
    match rule {
        FvsRule::Normalize { u, v }
        | FvsRule::CommonNeighbors { u, v }
        | FvsRule::AuxDouble { u, v } => g.set_multiplicity(*u, *v, 2),
        FvsRule::LowDegree { v } | FvsRule::Mandatory { v } | FvsRule::Flower { v } => {
            g.remove_vertex(*v)
        }
        FvsRule::ShortPath { a, x, b, .. } => {
            g.remove_vertex(*x);
            g.add_edge(*a, *b, 1);
        }
        FvsRule::TwinTriangle { u, x, y } => {
            g.remove_vertex(*y);
            g.set_multiplicity(*u, *x, 2);
        }
        FvsRule::PendingDoubles { u, eps, .. } => {
            g.remove_vertex(*u);
            g.remove_vertices(eps);
        }
        FvsRule::MultiFlag { a, b, eps, .. } => {
            g.remove_vertex(*a);
            g.remove_vertex(*b);
            g.remove_vertices(eps);
        }
        FvsRule::EdgeDelete { v, w } => g.remove_edge(*v, *w),
    }
}

/// Budget change caused by `rule`.
pub fn budget_drop(rule: &FvsRule) -> i64 {
    match rule {
        FvsRule::Mandatory { .. }
        | FvsRule::PendingDoubles { .. }
        | FvsRule::MultiFlag { .. }
        | FvsRule::Flower { .. } => 1,
        _ => 0,
    }
}

pub(crate) fn record(g: &mut MultiGraph, k: i64, rule: FvsRule) -> FvsEntry {
    apply_rule(g, &rule);
    FvsEntry {
        k_after: k - budget_drop(&rule),
        k_before: k,
        rule,
    }
}

fn triple_edge(g: &MultiGraph) -> Option<FvsRule> {
    g.edges()
        .into_iter()
        .find(|(u, v, m)| u != v && *m >= 3)
        .map(|(u, v, _)| FvsRule::Normalize { u, v })
}

fn low_degree(g: &MultiGraph) -> Option<FvsRule> {
    g.vertices()
        .find(|v| g.degree(*v) <= 1)
        .map(|v| FvsRule::LowDegree { v })
}

/// Pairs `(u, w)` with `u < from` are skipped.
fn common_neighbors(g: &MultiGraph, k: i64, from: VertexId) -> Option<FvsRule> {
    let adj: BTreeMap<VertexId, Vec<VertexId>> = g
        .vertices()
        .map(|v| (v, g.neighbors(v).collect()))
        .collect();
    let mut counts = vec![0i64; g.id_bound() as usize + 1];
    for (u, nu) in adj.range(from..) {
        let mut touched = Vec::new();
        for z in nu {
            for w in &adj[z] {
                if w > u {
                    if counts[w.0 as usize] == 0 {
                        touched.push(*w);
                    }
                    counts[w.0 as usize] += 1;
                }
            }
        }
        touched.sort();
        let hit = touched
            .iter()
            .copied()
            .find(|w| counts[w.0 as usize] >= k + 2 && g.multiplicity(*u, *w) < 2);
        for w in touched {
            counts[w.0 as usize] = 0;
        }
        if let Some(w) = hit {
            return Some(FvsRule::CommonNeighbors { u: *u, v: w });
        }
    }
    None
}

fn mandatory(g: &MultiGraph, k: i64) -> Option<FvsRule> {
    g.vertices()
        .find(|v| {
            g.has_loop(*v)
                || g.neighbor_multiplicities(*v)
                    .filter(|(_, m)| *m >= 2)
                    .count() as i64
                    > k
        })
        .map(|v| FvsRule::Mandatory { v })
}

/// Rule 1, cases i to iv in that order.
pub fn fvs_rule_basic(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    basic_from(g, k, VertexId(0))
}

fn basic_from(g: &mut MultiGraph, k: i64, from: VertexId) -> Option<FvsEntry> {
    let rule = triple_edge(g)
        .or_else(|| low_degree(g))
        .or_else(|| common_neighbors(g, k, from))
        .or_else(|| mandatory(g, k))?;
    Some(record(g, k, rule))
}

/// The two neighbours of a degree-two vertex without loops or parallel edges.
fn simple_pair(g: &MultiGraph, x: VertexId) -> Option<(VertexId, VertexId)> {
    if g.degree(x) != 2 || g.has_loop(x) {
        return None;
    }
    let mut it = g.neighbors(x);
    let p = it.next()?;
    let q = it.next()?;
    Some((p, q))
}

/// Rule 2: contract the middle of an induced path `a – x – b`.
pub fn fvs_rule_short_path(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    let (a, x, b) = g
        .vertices()
        .filter_map(|x| {
            let (a, b) = simple_pair(g, x)?;
            (!g.adjacent(a, b)).then_some((a, x, b))
        })
        .min()?;
    let context = Arc::new(g.clone());
    Some(record(g, k, FvsRule::ShortPath { a, x, b, context }))
}

/// Rule 3: a pendant triangle `u x y` with `x, y` of degree two.
pub fn fvs_rule_twin_triangle(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    let mut found = Vec::new();
    for x in g.vertices() {
        let Some((p, q)) = simple_pair(g, x) else {
            continue;
        };
        for (y, u) in [(p, q), (q, p)] {
            if y > x && simple_pair(g, y).is_some_and(|(s, t)| (s, t) == (x.min(u), x.max(u))) {
                found.push((u, x, y));
            }
        }
    }
    let (u, x, y) = found.into_iter().min()?;
    Some(record(g, k, FvsRule::TwinTriangle { u, x, y }))
}

fn pending(g: &MultiGraph, u: VertexId) -> VertexSet {
    g.neighbor_multiplicities(u)
        .filter(|(w, m)| *m >= 2 && g.degree(*w) == 2)
        .map(|(w, _)| w)
        .collect()
}

/// Rule 4: `u` with pendant double-edge neighbours `ε_u`.
pub fn fvs_rule_pending_doubles(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    let (u, eps) = g
        .vertices()
        .map(|u| (u, pending(g, u)))
        .find(|(_, eps)| !eps.is_empty())?;
    let context = Arc::new(g.clone());
    Some(record(g, k, FvsRule::PendingDoubles { u, eps, context }))
}

fn flag_at(g: &MultiGraph, a: VertexId, b: VertexId) -> Option<VertexSet> {
    let eps: VertexSet = g.neighbors(b).filter(|w| *w != a).collect();
    if eps.is_empty() || g.has_loop(b) {
        return None;
    }
    let ok = eps
        .iter()
        .all(|x| simple_pair(g, *x).is_some_and(|(p, q)| (p, q) == (a.min(b), a.max(b))));
    ok.then_some(eps)
}

/// Rule 5: `b` whose neighbours other than `a` are degree-two vertices on `ab`.
pub fn fvs_rule_multiflag(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    let mut best: Option<(VertexId, VertexId, VertexSet)> = None;
    for b in g.vertices() {
        for a in g.neighbors(b) {
            if best.as_ref().is_some_and(|(ba, bb, _)| (*ba, *bb) < (a, b)) {
                continue;
            }
            if let Some(eps) = flag_at(g, a, b) {
                best = Some((a, b, eps));
            }
        }
    }
    let (a, b, eps) = best?;
    let context = Arc::new(g.clone());
    Some(record(g, k, FvsRule::MultiFlag { a, b, eps, context }))
}

/// First applicable rule among 1 to 5, lowest rule first.
pub fn fvs_rule_low(g: &mut MultiGraph, k: i64) -> Option<FvsEntry> {
    low_from(g, k, VertexId(0))
}

/// As [`fvs_rule_low`], for callers that know no pair `(u, w)` with
/// `u < from` has `k + 2` common neighbours and a simple edge. Doubling an edge
/// leaves every neighbourhood unchanged, so after case iii fired on `(u, w)`
/// the search may resume at `u`.
pub(crate) fn low_from(g: &mut MultiGraph, k: i64, from: VertexId) -> Option<FvsEntry> {
    basic_from(g, k, from)
        .or_else(|| fvs_rule_short_path(g, k))
        .or_else(|| fvs_rule_twin_triangle(g, k))
        .or_else(|| fvs_rule_pending_doubles(g, k))
        .or_else(|| fvs_rule_multiflag(g, k))
}

fn with(s: &VertexSet, extra: impl IntoIterator<Item = VertexId>) -> VertexSet {
    let mut out = s.clone();
    out.extend(extra);
    out
}

fn extend_each(
    base: VertexSet,
    items: &VertexSet,
    max: i64,
) -> Box<dyn Iterator<Item = VertexSet> + Send> {
    if max < 0 {
        return Box::new(std::iter::empty());
    }
    let items: Vec<VertexId> = items.iter().copied().collect();
    Box::new(subsets_up_to(items, max as usize).map(move |z| with(&base, z)))
}

/// Solutions of the pre-rule instance assigned to `s`, a solution after it.
pub fn fvs_lift_entry(entry: &FvsEntry, s: &VertexSet) -> SolutionStream {
    let k = entry.k_before;
    let size = s.len() as i64;
    match &entry.rule {
        FvsRule::Normalize { .. }
        | FvsRule::CommonNeighbors { .. }
        | FvsRule::AuxDouble { .. }
        | FvsRule::EdgeDelete { .. } => SolutionStream::once(s.clone()),
        FvsRule::LowDegree { v } => {
            if size < k {
                SolutionStream::new([s.clone(), with(s, [*v])].into_iter())
            } else {
                SolutionStream::once(s.clone())
            }
        }
        FvsRule::Mandatory { v } | FvsRule::Flower { v } => SolutionStream::once(with(s, [*v])),
        FvsRule::ShortPath { a, x, context, .. } => {
            let mut out = vec![s.clone()];
            if s.contains(a) {
                let mut swapped = s.clone();
                swapped.remove(a);
                swapped.insert(*x);
                if context.is_forest(&swapped) {
                    out.push(swapped);
                }
                if size < k {
                    out.push(with(s, [*x]));
                }
            }
            SolutionStream::new(out.into_iter())
        }
        FvsRule::TwinTriangle { x, y, .. } => {
            let mut out = vec![s.clone()];
            if s.contains(x) {
                let mut swapped = s.clone();
                swapped.remove(x);
                swapped.insert(*y);
                out.push(swapped);
                if size < k {
                    out.push(with(s, [*y]));
                }
            }
            SolutionStream::new(out.into_iter())
        }
        FvsRule::PendingDoubles { u, eps, context } => {
            let head = extend_each(with(s, [*u]), eps, k - size - 1);
            let all = with(s, eps.iter().copied());
            let tail = (eps.len() as i64 <= k - size && context.is_forest(&all)).then_some(all);
            SolutionStream::new(head.chain(tail))
        }
        FvsRule::MultiFlag { a, b, eps, context } => {
            let budget = k - size - 1;
            let mut around_a = eps.clone();
            around_a.insert(*b);
            let first = extend_each(with(s, [*a]), &around_a, budget);
            let with_b = with(s, [*b]);
            let second = if context.is_forest(&with_b) {
                extend_each(with_b, eps, budget)
            } else {
                Box::new(std::iter::empty())
            };
            let all = with(s, eps.iter().copied());
            let third = (eps.len() as i64 <= k - size && context.is_forest(&all)).then_some(all);
            SolutionStream::new(first.chain(second).chain(third))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::oracle::brute_fvs;

    fn sorted(stream: SolutionStream) -> Vec<VertexSet> {
        let mut v: Vec<_> = stream.collect();
        v.sort();
        v
    }

    fn lift_all(pre: &MultiGraph, entry: &FvsEntry, post: &MultiGraph) -> Vec<VertexSet> {
        let reduced = brute_fvs(post, entry.k_after).unwrap().solutions.unwrap();
        let mut out: Vec<VertexSet> = reduced
            .iter()
            .flat_map(|s| fvs_lift_entry(entry, s))
            .collect();
        out.sort();
        let want = brute_fvs(pre, entry.k_before).unwrap().solutions.unwrap();
        assert_eq!(out, want, "lifting of {}", entry.rule.tag());
        out
    }

    #[test]
    fn basic_cases() {
        let mut g = MultiGraph::parse("p 2 3\ne 1 2 3").unwrap();
        let e = fvs_rule_basic(&mut g, 1).unwrap();
        assert_eq!(
            e.rule,
            FvsRule::Normalize {
                u: VertexId(1),
                v: VertexId(2)
            }
        );
        assert_eq!(
            (g.multiplicity(VertexId(1), VertexId(2)), e.k_after),
            (2, 1)
        );

        let mut g = MultiGraph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]);
        let e = fvs_rule_basic(&mut g, 1).unwrap();
        assert_eq!(e.rule, FvsRule::LowDegree { v: VertexId(4) });

        let pre = MultiGraph::parse("p 2 3\ne 1 1\ne 1 2 2").unwrap();
        let mut g = pre.clone();
        let e = fvs_rule_basic(&mut g, 1).unwrap();
        assert_eq!(e.rule, FvsRule::Mandatory { v: VertexId(1) });
        assert_eq!(e.k_after, 0);
        assert_eq!(lift_all(&pre, &e, &g), vec![vset([1])]);
    }

    #[test]
    fn common_neighbors_doubles() {
        // 1 and 2 share 3, 4, 5 with k = 1
        let pre = MultiGraph::from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let mut g = pre.clone();
        let e = fvs_rule_basic(&mut g, 1).unwrap();
        assert_eq!(
            e.rule,
            FvsRule::CommonNeighbors {
                u: VertexId(1),
                v: VertexId(2)
            }
        );
        assert_eq!(brute_fvs(&g, 1).unwrap(), brute_fvs(&pre, 1).unwrap());
        assert!(fvs_rule_basic(&mut pre.clone(), 2).is_none());
    }

    #[test]
    fn short_path_on_c4() {
        let c4 = MultiGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let mut g = c4.clone();
        let e = fvs_rule_short_path(&mut g, 1).unwrap();
        assert!(matches!(
            e.rule,
            FvsRule::ShortPath {
                a: VertexId(1),
                x: VertexId(2),
                b: VertexId(3),
                ..
            }
        ));
        assert_eq!(
            g,
            MultiGraph::from_edges(4, &[(1, 3), (3, 4), (4, 1)]).without(&vset([2]))
        );
        assert_eq!(
            sorted(fvs_lift_entry(&e, &vset([1]))),
            vec![vset([1]), vset([2])]
        );
        assert_eq!(sorted(fvs_lift_entry(&e, &vset([3]))), vec![vset([3])]);
        let all = lift_all(&c4, &e, &g);
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn twin_triangle_lifting() {
        let tri = MultiGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]);
        let mut g = tri.clone();
        assert!(fvs_rule_short_path(&mut g, 2).is_none());
        let e = fvs_rule_twin_triangle(&mut g, 2).unwrap();
        assert_eq!(
            e.rule,
            FvsRule::TwinTriangle {
                u: VertexId(1),
                x: VertexId(2),
                y: VertexId(3)
            }
        );
        assert_eq!(g.multiplicity(VertexId(1), VertexId(2)), 2);
        assert_eq!(
            sorted(fvs_lift_entry(&e, &vset([2]))),
            vec![vset([2]), vset([2, 3]), vset([3])]
        );
        assert_eq!(sorted(fvs_lift_entry(&e, &vset([1]))), vec![vset([1])]);
        lift_all(&tri, &e, &g);
    }

    #[test]
    fn pending_doubles_lifting() {
        let two_cycle = MultiGraph::parse("p 2 2\ne 1 2 2").unwrap();
        for (k, want) in [(1, 2), (2, 3)] {
            let mut g = two_cycle.clone();
            let e = fvs_rule_pending_doubles(&mut g, k).unwrap();
            assert_eq!(sorted(fvs_lift_entry(&e, &vset([]))).len(), want);
        }
        let double_flower = MultiGraph::parse("p 3 4\ne 1 2 2\ne 1 3 2").unwrap();
        let mut g = double_flower.clone();
        let e = fvs_rule_pending_doubles(&mut g, 2).unwrap();
        assert_eq!(
            sorted(fvs_lift_entry(&e, &vset([]))),
            vec![vset([1]), vset([1, 2]), vset([1, 3]), vset([2, 3])]
        );
        // K4 on 1..4 with a pendant double edge 1 – 5
        let mut edges = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        edges.push((1, 5));
        let mut pre = MultiGraph::from_edges(5, &edges);
        pre.add_edge(VertexId(1), VertexId(5), 1);
        let mut g = pre.clone();
        let e = fvs_rule_pending_doubles(&mut g, 3).unwrap();
        lift_all(&pre, &e, &g);
    }

    #[test]
    fn multiflag_lifting() {
        // a = 1, b = 2, x1 = 3 with a second triangle 1 – 4 – 5 on a
        let pre = MultiGraph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)]);
        let mut g = pre.clone();
        let e = fvs_rule_multiflag(&mut g, 2).unwrap();
        assert!(matches!(
            e.rule,
            FvsRule::MultiFlag {
                a: VertexId(1),
                b: VertexId(2),
                ..
            }
        ));
        lift_all(&pre, &e, &g);

        let tri = MultiGraph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]);
        for k in [1, 2] {
            let mut g = tri.clone();
            let e = fvs_rule_multiflag(&mut g, k).unwrap();
            assert!(g.is_empty());
            let sols = lift_all(&tri, &e, &g);
            assert_eq!(sols.len(), if k == 1 { 3 } else { 6 });
        }
        let pre = MultiGraph::parse("p 3 4\ne 1 2 2\ne 2 3\ne 1 3").unwrap();
        let mut g = pre.clone();
        let e = fvs_rule_multiflag(&mut g, 2).unwrap();
        lift_all(&pre, &e, &g);
    }
}
