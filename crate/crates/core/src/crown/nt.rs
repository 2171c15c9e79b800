use std::collections::BTreeMap;

use crate::crown::matching::{hopcroft_karp, konig_indices, max_bipartite_matching, Matching};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};

/// A `{0, 1/2, 1}` vertex cover; values are stored in half units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub halves: BTreeMap<VertexId, u8>,
}

impl HalfIntegralSolution {
    /// Total weight in half units.
    pub fn weight_halves(&self) -> u64 {
        self.halves.values().map(|h| *h as u64).sum()
    }

    pub fn is_feasible(&self, g: &MultiGraph) -> bool {
        g.edges().iter().all(|(u, v, _)| {
            let a = self.halves.get(u).copied().unwrap_or(0);
            let b = self.halves.get(v).copied().unwrap_or(0);
            if u == v {
                a == 2
            } else {
                a + b >= 2
            }
        })
    }
}

/// Partition `(C, H, B)` with an `H`-saturating matching into `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrownDecomposition {
    pub crown: VertexSet,
    pub head: VertexSet,
    pub body: VertexSet,
    pub matching: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NtOutcome {
    /// Every half-integral vertex cover weighs more than `k`.
    NoHalfIntegralCover { lp: HalfIntegralSolution },
    Crown {
        decomposition: CrownDecomposition,
        lp: HalfIntegralSolution,
    },
}

/// Optimal half-integral vertex cover through the bipartite double cover.
pub fn half_integral_optimum(g: &MultiGraph) -> HalfIntegralSolution {
    let vs: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    // left copy i is adjacent to right copy j whenever v_i v_j is an edge
    let adj: Vec<Vec<usize>> = vs
        .iter()
        .map(|v| g.neighbors(*v).map(|w| index[&w]).collect())
        .collect();
    let (mate_l, mate_r) = hopcroft_karp(&adj, vs.len());
    let (cov_l, cov_r) = konig_indices(&adj, &mate_l, &mate_r);
    let halves = vs
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, cov_l[i] as u8 + cov_r[i] as u8))
        .collect();
    HalfIntegralSolution { halves }
}

/// Crown decomposition of width at most `k`, or a certificate that the
/// half-integral relaxation already exceeds `k`.
pub fn nt_decompose(g: &MultiGraph, k: i64) -> Result<NtOutcome> {
    if k < 0 {
        return Err(Error::usage("negative budget"));
    }
    if !g.is_simple() {
        return Err(Error::usage("crown decomposition needs a simple graph"));
    }
    if let Some(v) = g.vertices().find(|v| g.degree(*v) == 0) {
        return Err(Error::usage(format!("vertex {v} is isolated")));
    }
    if (g.vertex_count() as i64) < 2 * k + 1 {
        return Err(Error::usage(format!(
            "graph has {} vertices, need at least {}",
            g.vertex_count(),
            2 * k + 1
        )));
    }
    let lp = half_integral_optimum(g);
    if lp.weight_halves() > 2 * k as u64 {
        return Ok(NtOutcome::NoHalfIntegralCover { lp });
    }
    let head: VertexSet = lp
        .halves
        .iter()
        .filter(|(_, h)| **h == 2)
        .map(|(v, _)| *v)
        .collect();
    let crown: VertexSet = lp
        .halves
        .iter()
        .filter(|(_, h)| **h == 0)
        .map(|(v, _)| *v)
        .collect();
    if crown.is_empty() {
        return Err(Error::internal(
            "half-integral optimum within budget has no zero vertex on a graph with more than 2k vertices",
        ));
    }
    let body: VertexSet = g
        .vertices()
        .filter(|v| !head.contains(v) && !crown.contains(v))
        .collect();
    let mut hc = VertexSet::new();
    hc.extend(head.iter().copied());
    hc.extend(crown.iter().copied());
    let mut between = g.induced(&hc);
    for h in &head {
        for w in g.neighbors(*h) {
            if head.contains(&w) {
                between.remove_edge(*h, w);
            }
        }
    }
    let matching = max_bipartite_matching(&between, &head, &crown)?;
    let decomposition = CrownDecomposition {
        crown,
        head,
        body,
        matching,
    };
    if !verify_crown(g, &decomposition) {
        return Err(Error::internal(
            "extracted crown decomposition fails verification",
        ));
    }
    Ok(NtOutcome::Crown { decomposition, lp })
}

/// Checks the partition, independence, `N(C) = H` and the saturating matching.
pub fn verify_crown(g: &MultiGraph, d: &CrownDecomposition) -> bool {
    let parts = [&d.crown, &d.head, &d.body];
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let all = g.vertex_set();
    if total != all.len() || !parts.iter().all(|p| p.is_subset(&all)) {
        return false;
    }
    if !d.crown.is_disjoint(&d.head)
        || !d.crown.is_disjoint(&d.body)
        || !d.head.is_disjoint(&d.body)
    {
        return false;
    }
    if !g.is_independent(&d.crown) || g.set_neighborhood(&d.crown) != d.head {
        return false;
    }
    if d.matching.len() != d.head.len() {
        return false;
    }
    d.head.iter().all(|h| match d.matching.mate(*h) {
        Some(c) => d.crown.contains(&c) && g.adjacent(*h, c),
        None => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_graph, vset, RandomSpec};
    use crate::oracle::brute_half_integral_vc;

    fn crown_of(out: NtOutcome) -> CrownDecomposition {
        match out {
            NtOutcome::Crown { decomposition, .. } => decomposition,
            other => panic!("expected a crown, got {other:?}"),
        }
    }

    #[test]
    fn star_k15() {
        let g = MultiGraph::from_edges(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]);
        let d = crown_of(nt_decompose(&g, 1).unwrap());
        assert_eq!(d.head, vset([1]));
        assert_eq!(d.crown, vset(2..=6));
        assert!(d.body.is_empty());
        assert!(verify_crown(&g, &d));

        let swapped = CrownDecomposition {
            crown: d.head.clone(),
            head: d.crown.clone(),
            body: VertexSet::new(),
            matching: d.matching.clone(),
        };
        assert!(!verify_crown(&g, &swapped));
        let unmatched = CrownDecomposition {
            matching: Matching::new(),
            ..d
        };
        assert!(!verify_crown(&g, &unmatched));
    }

    #[test]
    fn k5_has_no_cover() {
        let mut edges = Vec::new();
        for u in 1..=5 {
            for v in (u + 1)..=5 {
                edges.push((u, v));
            }
        }
        let g = MultiGraph::from_edges(5, &edges);
        match nt_decompose(&g, 2).unwrap() {
            NtOutcome::NoHalfIntegralCover { lp } => assert_eq!(lp.weight_halves(), 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn p3() {
        let g = MultiGraph::from_edges(3, &[(1, 2), (2, 3)]);
        let d = crown_of(nt_decompose(&g, 1).unwrap());
        assert_eq!(
            (d.head, d.crown, d.body),
            (vset([2]), vset([1, 3]), vset([]))
        );
    }

    #[test]
    fn preconditions() {
        let g = MultiGraph::from_edges(3, &[(1, 2)]);
        assert!(matches!(nt_decompose(&g, 1), Err(Error::Usage(_))));
        let g = MultiGraph::from_edges(3, &[(1, 2), (2, 3)]);
        assert!(matches!(nt_decompose(&g, 2), Err(Error::Usage(_))));
        let g = MultiGraph::parse("p 3 2\ne 1 2 2\ne 2 3").unwrap();
        assert!(matches!(nt_decompose(&g, 1), Err(Error::Usage(_))));
    }

    #[test]
    fn agrees_with_brute_force_lp() {
        let mut crowns = 0;
        for seed in 0..400 {
            let n = 3 + (seed % 10) as u32;
            let p = [0.15, 0.3, 0.5][(seed % 3) as usize];
            let mut g = random_graph(&RandomSpec::simple(n, p, seed));
            let iso: VertexSet = g.vertices().filter(|v| g.degree(*v) == 0).collect();
            g.remove_vertices(&iso);
            if g.is_empty() {
                continue;
            }
            let opt = brute_half_integral_vc(&g).unwrap() as u64;
            assert_eq!(half_integral_optimum(&g).weight_halves(), opt);
            let kmax = (g.vertex_count() as i64 - 1) / 2;
            for k in 0..=kmax {
                match nt_decompose(&g, k).unwrap() {
                    NtOutcome::NoHalfIntegralCover { .. } => assert!(opt > 2 * k as u64),
                    NtOutcome::Crown { decomposition, lp } => {
                        assert!(opt <= 2 * k as u64);
                        assert!(lp.is_feasible(&g));
                        assert!(verify_crown(&g, &decomposition));
                        assert!(decomposition.head.len() as i64 <= k);
                        assert!(!decomposition.crown.is_empty());
                        crowns += 1;
                    }
                }
            }
        }
        assert!(crowns > 50);
    }
}
