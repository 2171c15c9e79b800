//! Brute-force ground truth for both problems and solution-set comparison.
//!
//! Nothing here shares code with the kernels beyond the graph carrier, so the
//! oracles stay independent of the algorithms they check.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};

pub const VC_GUARD: usize = 24;
pub const FVS_GUARD: usize = 20;
pub const HALF_INTEGRAL_GUARD: usize = 16;

/// Number of solutions kept in a report when no explicit cap is given.
pub const DEFAULT_RETAIN: usize = 1 << 16;

/// Summary of a solution family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSetReport {
    pub count: u64,
    /// Sorted, distinct solutions; `None` once the retention cap was exceeded.
    pub solutions: Option<Vec<VertexSet>>,
    /// Order-independent hash of the multiset of solutions.
    pub digest: u128,
    /// Solutions seen more than once (only detectable while retained).
    pub duplicates: Vec<VertexSet>,
}

impl SolutionSetReport {
    pub fn collect<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Self::collect_capped(iter, DEFAULT_RETAIN)
    }

    pub fn collect_capped<I: IntoIterator<Item = VertexSet>>(iter: I, cap: usize) -> Self {
        let mut count = 0u64;
        let mut digest = 0u128;
        let mut kept: Option<BTreeSet<VertexSet>> = Some(BTreeSet::new());
        let mut duplicates = Vec::new();
        for s in iter {
            count += 1;
            digest = digest.wrapping_add(solution_hash(&s));
            if let Some(set) = kept.as_mut() {
                if set.contains(&s) {
                    duplicates.push(s);
                } else if set.len() >= cap {
                    kept = None;
                } else {
                    set.insert(s);
                }
            }
        }
        SolutionSetReport {
            count,
            solutions: kept.map(|s| s.into_iter().collect()),
            digest,
            duplicates,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

/// Polynomial hash of a sorted member list, modulo 2^128.
fn solution_hash(s: &VertexSet) -> u128 {
    const P: u128 = 0x9e37_79b9_7f4a_7c15_f39c_c060_5ced_c835;
    let mut h: u128 = 0x6a09_e667_f3bc_c908;
    for v in s {
        h = h.wrapping_mul(P).wrapping_add(v.0 as u128 + 1);
    }
    h = h.wrapping_mul(P).wrapping_add(s.len() as u128);
    // final avalanche so that summing hashes does not cancel structure
    h ^= h >> 67;
    h = h.wrapping_mul(P);
    h ^ (h >> 61)
}

/// Every vertex cover of size at most `k`.
pub fn brute_vc(g: &MultiGraph, k: i64) -> Result<SolutionSetReport> {
    let n = g.vertex_count();
    if n > VC_GUARD {
        return Err(Error::usage(format!(
            "vertex cover oracle limited to {VC_GUARD} vertices, got {n}"
        )));
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    let vs: Vec<VertexId> = g.vertices().collect();
    let sols =
        subsets_le(&vs, k).filter(|s| edges.iter().all(|(u, v)| s.contains(u) || s.contains(v)));
    Ok(SolutionSetReport::collect_capped(sols, usize::MAX))
}

/// Every feedback vertex set of size at most `k`.
pub fn brute_fvs(g: &MultiGraph, k: i64) -> Result<SolutionSetReport> {
    let n = g.vertex_count();
    if n > FVS_GUARD {
        return Err(Error::usage(format!(
            "feedback vertex set oracle limited to {FVS_GUARD} vertices, got {n}"
        )));
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    let sols = subsets_le(&vs, k).filter(|s| g.is_forest(s));
    Ok(SolutionSetReport::collect_capped(sols, usize::MAX))
}

fn subsets_le(vs: &[VertexId], k: i64) -> impl Iterator<Item = VertexSet> + '_ {
    let top = if k < 0 {
        None
    } else {
        Some((k as usize).min(vs.len()))
    };
    top.into_iter().flat_map(move |top| {
        (0..=top).flat_map(move |size| {
            vs.iter()
                .copied()
                .combinations(size)
                .map(|c| c.into_iter().collect::<VertexSet>())
        })
    })
}

/// Minimum weight of a `{0, 1/2, 1}` vertex cover, in half units
/// (so a triangle gives 3).
pub fn brute_half_integral_vc(g: &MultiGraph) -> Result<u32> {
    let n = g.vertex_count();
    if n > HALF_INTEGRAL_GUARD {
        return Err(Error::usage(format!(
            "half-integral oracle limited to {HALF_INTEGRAL_GUARD} vertices, got {n}"
        )));
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    // earlier[i] lists indices j < i adjacent to vs[i]; loops force value 2
    let mut earlier = vec![Vec::new(); n];
    let mut looped = vec![false; n];
    for (i, u) in vs.iter().enumerate() {
        for (j, w) in vs.iter().enumerate().take(i + 1) {
            if g.multiplicity(*u, *w) > 0 {
                if i == j {
                    looped[i] = true;
                } else {
                    earlier[i].push(j);
                }
            }
        }
    }
    let mut best = 2 * n as u32;
    let mut assign = vec![0u32; n];
    search(0, 0, &earlier, &looped, &mut assign, &mut best);
    Ok(best)
}

fn search(
    i: usize,
    weight: u32,
    earlier: &[Vec<usize>],
    looped: &[bool],
    assign: &mut [u32],
    best: &mut u32,
) {
    if weight >= *best {
        return;
    }
    if i == assign.len() {
        *best = weight;
        return;
    }
    let need = earlier[i]
        .iter()
        .map(|&j| 2 - assign[j])
        .max()
        .unwrap_or(0)
        .max(if looped[i] { 2 } else { 0 });
    for val in need..=2 {
        assign[i] = val;
        search(i + 1, weight + val, earlier, looped, assign, best);
    }
}

/// Outcome of comparing two solution families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Diff(DiffWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffWitness {
    OnlyLeft(VertexSet),
    OnlyRight(VertexSet),
    Duplicate(VertexSet),
    /// The families differ but neither side retained its solutions.
    Digest {
        left_count: u64,
        right_count: u64,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

pub fn compare(a: &SolutionSetReport, b: &SolutionSetReport) -> Comparison {
    if let Some(d) = a.duplicates.first().or(b.duplicates.first()) {
        return Comparison::Diff(DiffWitness::Duplicate(d.clone()));
    }
    if let (Some(la), Some(lb)) = (&a.solutions, &b.solutions) {
        let sa: BTreeSet<&VertexSet> = la.iter().collect();
        let sb: BTreeSet<&VertexSet> = lb.iter().collect();
        if let Some(x) = sa.difference(&sb).next() {
            return Comparison::Diff(DiffWitness::OnlyLeft((*x).clone()));
        }
        if let Some(x) = sb.difference(&sa).next() {
            return Comparison::Diff(DiffWitness::OnlyRight((*x).clone()));
        }
        return Comparison::Equal;
    }
    if a.count == b.count && a.digest == b.digest {
        Comparison::Equal
    } else {
        Comparison::Diff(DiffWitness::Digest {
            left_count: a.count,
            right_count: b.count,
        })
    }
}
