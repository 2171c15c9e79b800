//! Local-ratio 2-approximation for feedback vertex set.

use num::{BigRational, Zero};

use crate::graph::{MultiGraph, VertexId, VertexSet};

fn strip_low_degree(g: &mut MultiGraph) {
    loop {
        let low: Vec<VertexId> = g.vertices().filter(|v| g.degree(*v) <= 1).collect();
        if low.is_empty() {
            return;
        }
        g.remove_vertices(&low);
    }
}

/// A feedback vertex set of size at most twice the optimum.
///
/// Unit weights are reduced in exact arithmetic by `γ·(deg − 1)` with `γ` the
/// smallest ratio `w / (deg − 1)`; vertices reaching weight zero are taken.
/// A final reverse-deletion pass drops redundant vertices.
pub fn two_approx_fvs(g: &MultiGraph) -> VertexSet {
    let mut h = g.clone();
    let mut weight: std::collections::BTreeMap<VertexId, BigRational> = h
        .vertices()
        .map(|v| (v, BigRational::from_integer(1.into())))
        .collect();
    let mut taken: Vec<VertexId> = Vec::new();
    strip_low_degree(&mut h);
    while !h.is_empty() {
        let excess = |v: VertexId| BigRational::from_integer((h.degree(v) as i64 - 1).into());
        let gamma = h
            .vertices()
            .map(|v| &weight[&v] / excess(v))
            .min()
            .expect("graph is non-empty");
        let mut zero = Vec::new();
        for v in h.vertices() {
            let w = weight.get_mut(&v).expect("weight for every vertex");
            *w -= &gamma * excess(v);
            if w.is_zero() {
                zero.push(v);
            }
        }
        h.remove_vertices(&zero);
        taken.extend(zero);
        strip_low_degree(&mut h);
    }
    let mut chosen: VertexSet = taken.iter().copied().collect();
    for v in taken.iter().rev() {
        chosen.remove(v);
        if !g.is_forest(&chosen) {
            chosen.insert(*v);
        }
    }
    chosen
}
