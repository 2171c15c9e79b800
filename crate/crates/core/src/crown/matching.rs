use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::steps;

/// A set of vertex-disjoint edges, stored as a symmetric mate map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    mate: BTreeMap<VertexId, VertexId>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a matching from pairs; fails when a vertex repeats.
    pub fn from_pairs<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> Result<Self> {
        let mut m = Matching::new();
        for (a, b) in pairs {
            m.insert(a, b)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b || self.mate.contains_key(&a) || self.mate.contains_key(&b) {
            return Err(Error::Structure(format!(
                "pair {a}-{b} is not disjoint from the matching"
            )));
        }
        self.mate.insert(a, b);
        self.mate.insert(b, a);
        Ok(())
    }

    #[inline]
    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        steps::tick();
        self.mate.get(&v).copied()
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate.contains_key(&v)
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.mate.is_empty()
    }

    /// Pairs `(a, b)` with `a < b`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.mate
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (*a, *b))
    }

    /// Saturated vertices.
    pub fn vertices(&self) -> VertexSet {
        self.mate.keys().copied().collect()
    }

    /// Image of a set under the matching; unmatched members are skipped.
    pub fn image(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.mate(*v)).collect()
    }

    /// Pairs with both endpoints in `keep`.
    pub fn restricted(&self, keep: &VertexSet) -> Matching {
        let mut m = Matching::new();
        for (a, b) in self.pairs() {
            if keep.contains(&a) && keep.contains(&b) {
                m.mate.insert(a, b);
                m.mate.insert(b, a);
            }
        }
        m
    }
}

/// Hopcroft–Karp on an index-based bipartite graph.
///
/// `adj[l]` lists the right neighbours of left vertex `l`. Returns the mate
/// arrays of both sides.
pub(crate) fn hopcroft_karp(
    adj: &[Vec<usize>],
    n_right: usize,
) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n_left = adj.len();
    let mut mate_l = vec![None; n_left];
    let mut mate_r: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![usize::MAX; n_left];
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for l in 0..n_left {
            if mate_l[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                steps::tick();
                match mate_r[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == usize::MAX => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut iter = vec![0usize; n_left];
        for l in 0..n_left {
            if mate_l[l].is_none() {
                augment(l, adj, &mut mate_l, &mut mate_r, &mut dist, &mut iter);
            }
        }
    }
    (mate_l, mate_r)
}

fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [Option<usize>],
    mate_r: &mut [Option<usize>],
    dist: &mut [usize],
    iter: &mut [usize],
) -> bool {
    // iterative DFS along the BFS layers
    let mut stack = vec![root];
    let mut path_r: Vec<usize> = Vec::new();
    while let Some(&l) = stack.last() {
        if iter[l] >= adj[l].len() {
            dist[l] = usize::MAX;
            stack.pop();
            path_r.pop();
            continue;
        }
        let r = adj[l][iter[l]];
        iter[l] += 1;
        steps::tick();
        match mate_r[r] {
            None => {
                path_r.push(r);
                for (l, r) in stack.iter().zip(path_r.iter()) {
                    mate_l[*l] = Some(*r);
                    mate_r[*r] = Some(*l);
                }
                return true;
            }
            Some(l2) if dist[l2] == dist[l].wrapping_add(1) => {
                path_r.push(r);
                stack.push(l2);
            }
            _ => {}
        }
    }
    false
}

/// Kőnig cover from a maximum matching: `(L ∖ Z) ∪ (R ∩ Z)` where `Z` is
/// everything reachable from free left vertices by alternating paths.
/// Returns the covered left and right indices.
pub(crate) fn konig_indices(
    adj: &[Vec<usize>],
    mate_l: &[Option<usize>],
    mate_r: &[Option<usize>],
) -> (Vec<bool>, Vec<bool>) {
    let n_left = adj.len();
    let mut z_l = vec![false; n_left];
    let mut z_r = vec![false; mate_r.len()];
    let mut queue = VecDeque::new();
    for l in 0..n_left {
        if mate_l[l].is_none() {
            z_l[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            steps::tick();
            if mate_l[l] == Some(r) || z_r[r] {
                continue;
            }
            z_r[r] = true;
            if let Some(l2) = mate_r[r] {
                if !z_l[l2] {
                    z_l[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }
    (z_l.iter().map(|z| !z).collect(), z_r)
}

struct Indexed {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

fn index_bipartite(g: &MultiGraph, left: &VertexSet, right: &VertexSet) -> Result<Indexed> {
    if let Some(v) = left.intersection(right).next() {
        return Err(Error::Structure(format!("vertex {v} lies on both sides")));
    }
    for (u, v, _) in g.edges() {
        let ok =
            (left.contains(&u) && right.contains(&v)) || (left.contains(&v) && right.contains(&u));
        if !ok {
            return Err(Error::Structure(format!(
                "edge {u}-{v} does not cross the bipartition"
            )));
        }
    }
    let left_v: Vec<VertexId> = left.iter().copied().collect();
    let right_v: Vec<VertexId> = right.iter().copied().collect();
    let r_index: BTreeMap<VertexId, usize> =
        right_v.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let adj = left_v
        .iter()
        .map(|u| {
            g.neighbors(*u)
                .filter_map(|w| r_index.get(&w).copied())
                .collect()
        })
        .collect();
    Ok(Indexed {
        left: left_v,
        right: right_v,
        adj,
    })
}

/// Maximum-cardinality matching of a bipartite graph.
pub fn max_bipartite_matching(
    g: &MultiGraph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<Matching> {
    let ix = index_bipartite(g, left, right)?;
    let (mate_l, _) = hopcroft_karp(&ix.adj, ix.right.len());
    let mut m = Matching::new();
    for (l, r) in mate_l.iter().enumerate() {
        if let Some(r) = r {
            m.insert(ix.left[l], ix.right[*r])?;
        }
    }
    Ok(m)
}

/// Minimum vertex cover of a bipartite graph, derived from a maximum matching.
pub fn konig_cover(
    g: &MultiGraph,
    left: &VertexSet,
    right: &VertexSet,
    m: &Matching,
) -> Result<VertexSet> {
    let ix = index_bipartite(g, left, right)?;
    let r_index: BTreeMap<VertexId, usize> =
        ix.right.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut mate_l = vec![None; ix.left.len()];
    let mut mate_r = vec![None; ix.right.len()];
    for (l, u) in ix.left.iter().enumerate() {
        if let Some(w) = m.mate(*u) {
            let r = *r_index.get(&w).ok_or_else(|| {
                Error::Structure(format!("matched pair {u}-{w} leaves the graph"))
            })?;
            if g.multiplicity(*u, w) == 0 {
                return Err(Error::Structure(format!(
                    "matched pair {u}-{w} is not an edge"
                )));
            }
            mate_l[l] = Some(r);
            mate_r[r] = Some(l);
        }
    }
    let (cov_l, cov_r) = konig_indices(&ix.adj, &mate_l, &mate_r);
    let cover: VertexSet = ix
        .left
        .iter()
        .zip(&cov_l)
        .chain(ix.right.iter().zip(&cov_r))
        .filter(|(_, c)| **c)
        .map(|(v, _)| *v)
        .collect();
    if cover.len() != m.len() {
        return Err(Error::internal(format!(
            "cover of size {} from a matching of size {}: the matching is not maximum",
            cover.len(),
            m.len()
        )));
    }
    Ok(cover)
}
