//! Undirected multigraphs with loops, plus the edge-list text format.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::steps;

/// A vertex identifier. The total order used for every tie-break is the
/// ascending order of these ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for VertexId {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(VertexId)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Builds a vertex set from raw ids.
pub fn vset<I: IntoIterator<Item = u32>>(ids: I) -> VertexSet {
    ids.into_iter().map(VertexId).collect()
}

/// Undirected multigraph. A loop at `v` is stored as `adj[v][v]` and
/// contributes twice its multiplicity to `degree(v)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultiGraph {
    adj: BTreeMap<VertexId, BTreeMap<VertexId, u32>>,
    id_bound: u32,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `1..=n` without edges.
    pub fn with_vertices(n: u32) -> Self {
        let mut g = Self::new();
        for i in 1..=n {
            g.add_vertex(VertexId(i));
        }
        g
    }

    /// Builds a graph on `1..=n` from `(u, v)` pairs, each adding multiplicity one.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Self {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v), 1);
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.id_bound = self.id_bound.max(v.0);
        self.adj.entry(v).or_default();
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in nbrs.keys() {
                if *w != v {
                    if let Some(row) = self.adj.get_mut(w) {
                        row.remove(&v);
                    }
                }
            }
        }
    }

    pub fn remove_vertices<'a, I: IntoIterator<Item = &'a VertexId>>(&mut self, vs: I) {
        for v in vs {
            self.remove_vertex(*v);
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        steps::tick();
        self.adj.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Largest id this graph has ever held; used as `n` in the text format.
    pub fn id_bound(&self) -> u32 {
        self.id_bound
    }

    /// Number of distinct vertex pairs (and loops) carrying an edge.
    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Sum of multiplicities over all edges.
    pub fn total_multiplicity(&self) -> u64 {
        self.edges().iter().map(|&(_, _, m)| m as u64).sum()
    }

    /// Adds `mult` parallel copies of `uv`. Missing endpoints are created.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, mult: u32) {
        if mult == 0 {
            return;
        }
        self.add_vertex(u);
        self.add_vertex(v);
        *self.adj.get_mut(&u).unwrap().entry(v).or_insert(0) += mult;
        if u != v {
            *self.adj.get_mut(&v).unwrap().entry(u).or_insert(0) += mult;
        }
    }

    /// Sets the multiplicity of `uv`; zero removes the edge.
    pub fn set_multiplicity(&mut self, u: VertexId, v: VertexId, mult: u32) {
        if mult == 0 {
            self.remove_edge(u, v);
            return;
        }
        self.add_vertex(u);
        self.add_vertex(v);
        self.adj.get_mut(&u).unwrap().insert(v, mult);
        self.adj.get_mut(&v).unwrap().insert(u, mult);
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(row) = self.adj.get_mut(&u) {
            row.remove(&v);
        }
        if let Some(row) = self.adj.get_mut(&v) {
            row.remove(&u);
        }
    }

    #[inline]
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        steps::tick();
        self.adj
            .get(&u)
            .and_then(|row| row.get(&v))
            .copied()
            .unwrap_or(0)
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn has_loop(&self, v: VertexId) -> bool {
        self.multiplicity(v, v) > 0
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        match self.adj.get(&v) {
            None => 0,
            Some(row) => row
                .iter()
                .map(|(w, m)| if *w == v { 2 * *m as u64 } else { *m as u64 })
                .sum(),
        }
    }

    /// Distinct neighbours other than `v` itself, ascending.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj
            .get(&v)
            .into_iter()
            .flat_map(|row| row.keys().copied())
            .filter(move |w| *w != v)
            .inspect(|_| steps::tick())
    }

    /// Neighbours with multiplicities, loops excluded.
    pub fn neighbor_multiplicities(
        &self,
        v: VertexId,
    ) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.adj
            .get(&v)
            .into_iter()
            .flat_map(|row| row.iter().map(|(w, m)| (*w, *m)))
            .filter(move |(w, _)| *w != v)
            .inspect(|_| steps::tick())
    }

    pub fn neighbor_set(&self, v: VertexId) -> VertexSet {
        self.neighbors(v).collect()
    }

    /// Open neighbourhood of a set: neighbours of members that are not members.
    pub fn set_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in set {
            for w in self.neighbors(*v) {
                if !set.contains(&w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> u64 {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All edges as `(u, v, mult)` with `u ≤ v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, u32)> {
        let mut out = Vec::new();
        for (u, row) in &self.adj {
            for (v, m) in row.range(*u..) {
                out.push((*u, *v, *m));
            }
        }
        out
    }

    /// True when there are no loops and no multiplicity above one.
    pub fn is_simple(&self) -> bool {
        self.adj
            .iter()
            .all(|(u, row)| row.iter().all(|(v, m)| u != v && *m == 1))
    }

    /// Subgraph induced by `keep`.
    pub fn induced(&self, keep: &VertexSet) -> MultiGraph {
        let mut g = MultiGraph {
            adj: BTreeMap::new(),
            id_bound: self.id_bound,
        };
        for v in keep {
            if let Some(row) = self.adj.get(v) {
                let filtered = row
                    .iter()
                    .filter(|(w, _)| keep.contains(w))
                    .map(|(w, m)| (*w, *m))
                    .collect();
                g.adj.insert(*v, filtered);
            }
        }
        g
    }

    /// Copy of the graph with `removed` deleted.
    pub fn without(&self, removed: &VertexSet) -> MultiGraph {
        let keep = self
            .vertices()
            .filter(|v| !removed.contains(v))
            .collect::<VertexSet>();
        self.induced(&keep)
    }

    /// Contracts `x` into its neighbour `a`: `x` disappears and every other
    /// edge `xw` becomes an edge `aw` with the multiplicity added on.
    pub fn contract(&mut self, x: VertexId, a: VertexId) -> Result<()> {
        if x == a || self.multiplicity(x, a) == 0 {
            return Err(Error::Contract { x, a });
        }
        let row = self.adj.get(&x).cloned().unwrap_or_default();
        self.remove_vertex(x);
        for (w, m) in row {
            if w == a {
                continue;
            }
            if w == x {
                self.add_edge(a, a, m);
            } else {
                self.add_edge(a, w, m);
            }
        }
        Ok(())
    }

    /// True iff `G ∖ removed` has no loop, no parallel edge and no cycle.
    pub fn is_forest(&self, removed: &VertexSet) -> bool {
        let mut uf = UnionFind::new(self.id_bound as usize + 1);
        for (u, row) in &self.adj {
            if removed.contains(u) {
                continue;
            }
            for (v, m) in row.range(*u..) {
                steps::tick();
                if removed.contains(v) {
                    continue;
                }
                if u == v || *m >= 2 || !uf.union(u.0 as usize, v.0 as usize) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `G ∖ removed` contains a cycle passing through `x`.
    pub fn has_cycle_through(&self, x: VertexId, removed: &VertexSet) -> bool {
        if removed.contains(&x) || !self.adj.contains_key(&x) {
            return false;
        }
        if self.has_loop(x) {
            return true;
        }
        let mut uf = UnionFind::new(self.id_bound as usize + 1);
        for (u, row) in &self.adj {
            if *u == x || removed.contains(u) {
                continue;
            }
            for v in row.range(*u..).map(|(v, _)| v) {
                if *v != x && !removed.contains(v) {
                    uf.union(u.0 as usize, v.0 as usize);
                }
            }
        }
        let mut seen = BTreeSet::new();
        for (w, m) in self.neighbor_multiplicities(x) {
            if removed.contains(&w) {
                continue;
            }
            if m >= 2 || !seen.insert(uf.find(w.0 as usize)) {
                return true;
            }
        }
        false
    }

    /// Components of `G ∖ excluded`, each sorted, listed by smallest member.
    pub fn connected_components(&self, excluded: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if excluded.contains(&start) || seen.contains(&start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.neighbors(u) {
                    if !excluded.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Vertices of a shortest cycle of `G ∖ excluded`, in cycle order.
    ///
    /// Loops count as cycles of length one and parallel edges as cycles of
    /// length two. Ties go to the smallest first edge.
    pub fn shortest_cycle(&self, excluded: &VertexSet) -> Option<Vec<VertexId>> {
        let mut best: Option<Vec<VertexId>> = None;
        for (u, v, m) in self.edges() {
            if excluded.contains(&u) || excluded.contains(&v) {
                continue;
            }
            if u == v {
                return Some(vec![u]);
            }
            if m >= 2 && best.as_ref().is_none_or(|b| b.len() > 2) {
                best = Some(vec![u, v]);
            }
        }
        if best.is_some() {
            return best;
        }
        for (u, v, _) in self.edges() {
            if excluded.contains(&u) || excluded.contains(&v) {
                continue;
            }
            let limit = best.as_ref().map_or(usize::MAX, |b| b.len());
            if let Some(path) = self.shortest_path_avoiding_edge(u, v, excluded, limit) {
                if path.len() < limit {
                    best = Some(path);
                }
            }
            if best.as_ref().is_some_and(|b| b.len() == 3) {
                break;
            }
        }
        best
    }

    fn shortest_path_avoiding_edge(
        &self,
        u: VertexId,
        v: VertexId,
        excluded: &VertexSet,
        limit: usize,
    ) -> Option<Vec<VertexId>> {
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
        dist.insert(u, 1);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d >= limit {
                return None;
            }
            for w in self.neighbors(x) {
                if excluded.contains(&w) || (x == u && w == v) || dist.contains_key(&w) {
                    continue;
                }
                dist.insert(w, d + 1);
                parent.insert(w, x);
                if w == v {
                    let mut path = vec![v];
                    let mut cur = v;
                    while let Some(p) = parent.get(&cur) {
                        path.push(*p);
                        cur = *p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// True iff every edge has an endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        self.adj
            .iter()
            .all(|(u, row)| cover.contains(u) || row.keys().all(|v| cover.contains(v)))
    }

    /// True iff no two members of `set` are adjacent (loops count).
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| {
            self.adj
                .get(u)
                .is_none_or(|row| row.keys().all(|v| !set.contains(v)))
        })
    }

    /// Parses the edge-list format.
    ///
    /// The `m` of the header may be either the number of `e` lines or the
    /// total multiplicity; serialization writes the latter. Besides `#` comments, the header `p <n> <m>` and `e <u> <v> [mult]`
    /// lines, an optional `d <ids..>` line lists ids in `1..=n` that are
    /// absent from the graph.
    pub fn parse(text: &str) -> Result<MultiGraph> {
        let mut g: Option<MultiGraph> = None;
        let mut declared_m = 0u64;
        let mut header_line = 0usize;
        let mut seen_lines = 0u64;
        let mut seen_mult = 0u64;
        let mut holes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or("");
            let perr = |message: &str| Error::Parse {
                line: line_no,
                message: message.to_string(),
            };
            match tag {
                "p" => {
                    if g.is_some() {
                        return Err(perr("duplicate header"));
                    }
                    let nums: Vec<&str> = parts.collect();
                    if nums.len() != 2 {
                        return Err(perr("header must be `p <n> <m>`"));
                    }
                    let n: u32 = nums[0].parse().map_err(|_| perr("bad vertex count"))?;
                    declared_m = nums[1].parse().map_err(|_| perr("bad edge count"))?;
                    header_line = line_no;
                    g = Some(MultiGraph::with_vertices(n));
                }
                "e" => {
                    let graph = g.as_mut().ok_or_else(|| perr("edge before header"))?;
                    let nums: Vec<&str> = parts.collect();
                    if nums.len() != 2 && nums.len() != 3 {
                        return Err(perr("edge must be `e <u> <v> [mult]`"));
                    }
                    let n = graph.id_bound;
                    let id = |s: &str| -> Result<VertexId> {
                        let v: u32 = s.parse().map_err(|_| perr("bad vertex id"))?;
                        if v == 0 || v > n {
                            return Err(perr(&format!("vertex id {v} out of range 1..={n}")));
                        }
                        Ok(VertexId(v))
                    };
                    let u = id(nums[0])?;
                    let v = id(nums[1])?;
                    let mult: i64 = match nums.get(2) {
                        Some(s) => s.parse().map_err(|_| perr("bad multiplicity"))?,
                        None => 1,
                    };
                    if mult < 1 || mult > u32::MAX as i64 {
                        return Err(perr("multiplicity must be at least 1"));
                    }
                    graph.add_edge(u, v, mult as u32);
                    seen_lines += 1;
                    seen_mult += mult as u64;
                }
                "d" => {
                    let graph = g.as_ref().ok_or_else(|| perr("hole list before header"))?;
                    for s in parts {
                        let v: u32 = s.parse().map_err(|_| perr("bad vertex id"))?;
                        if v == 0 || v > graph.id_bound {
                            return Err(perr(&format!("vertex id {v} out of range")));
                        }
                        holes.push((line_no, VertexId(v)));
                    }
                }
                _ => return Err(perr(&format!("unknown line type `{tag}`"))),
            }
        }
        let mut g = g.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        if declared_m != seen_lines && declared_m != seen_mult {
            return Err(Error::Parse {
                line: header_line,
                message: format!(
                    "header declares {declared_m} edges, found {seen_lines} lines of total multiplicity {seen_mult}"
                ),
            });
        }
        for (line, v) in holes {
            if g.degree(v) > 0 {
                return Err(Error::Parse {
                    line,
                    message: format!("absent vertex {v} has incident edges"),
                });
            }
            g.adj.remove(&v);
        }
        Ok(g)
    }

    /// Canonical text form; edges sorted by `(min id, max id)`.
    pub fn serialize(&self) -> String {
        let edges = self.edges();
        let m: u64 = edges.iter().map(|e| e.2 as u64).sum();
        let mut out = format!("p {} {}", self.id_bound, m);
        let holes: Vec<String> = (1..=self.id_bound)
            .map(VertexId)
            .filter(|v| !self.adj.contains_key(v))
            .map(|v| v.to_string())
            .collect();
        if !holes.is_empty() {
            out.push_str("\nd ");
            out.push_str(&holes.join(" "));
        }
        for (u, v, m) in edges {
            if m == 1 {
                out.push_str(&format!("\ne {u} {v}"));
            } else {
                out.push_str(&format!("\ne {u} {v} {m}"));
            }
        }
        out
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when both were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Parameters of the seeded random multigraph generator.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSpec {
    pub n: u32,
    pub p: f64,
    pub multi_prob: f64,
    pub loop_prob: f64,
    pub seed: u64,
}

impl RandomSpec {
    pub fn simple(n: u32, p: f64, seed: u64) -> Self {
        RandomSpec {
            n,
            p,
            multi_prob: 0.0,
            loop_prob: 0.0,
            seed,
        }
    }
}

/// Deterministic Erdős–Rényi style multigraph on `1..=n`.
pub fn random_graph(spec: &RandomSpec) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut g = MultiGraph::with_vertices(spec.n);
    for u in 1..=spec.n {
        for v in (u + 1)..=spec.n {
            if rng.gen_bool(spec.p.clamp(0.0, 1.0)) {
                let doubled = rng.gen_bool(spec.multi_prob.clamp(0.0, 1.0));
                g.add_edge(VertexId(u), VertexId(v), if doubled { 2 } else { 1 });
            }
        }
    }
    for v in 1..=spec.n {
        if rng.gen_bool(spec.loop_prob.clamp(0.0, 1.0)) {
            g.add_edge(VertexId(v), VertexId(v), 1);
        }
    }
    g
}
