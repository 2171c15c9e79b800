//! The bipartite structure between the components hanging off a high-degree
//! vertex and its hitting set, and the two rules driven by it.

use crate::error::{Error, Result};
use crate::fvs::rules::record;
use crate::fvs::trace::{FvsEntry, FvsRule};
use crate::graph::{MultiGraph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxBipartite {
    pub v: VertexId,
    /// `D_v`: components of `G ∖ (H_v ∪ {v})` joined to `v` by one simple edge.
    pub components: Vec<VertexSet>,
    /// The neighbour of `v` inside each component.
    pub attachments: Vec<VertexId>,
    pub head: VertexSet,
    /// Pairs `(i, u)` with `N(u) ∩ D_i ≠ ∅`.
    pub adjacency: Vec<(usize, VertexId)>,
    /// `H²_v`: head vertices sharing a double edge with `v`.
    pub h2: VertexSet,
}

impl AuxBipartite {
    /// Builds the structure for any `head` not containing `v`.
    pub fn from_hitting_set(g: &MultiGraph, v: VertexId, head: &VertexSet) -> AuxBipartite {
        let mut excluded = head.clone();
        excluded.insert(v);
        let mut components = Vec::new();
        let mut attachments = Vec::new();
        for comp in g.connected_components(&excluded) {
            let mut links = comp
                .iter()
                .map(|w| (*w, g.multiplicity(v, *w)))
                .filter(|(_, m)| *m > 0);
            if let (Some((w, 1)), None) = (links.next(), links.next()) {
                components.push(comp);
                attachments.push(w);
            }
        }
        let mut adjacency = Vec::new();
        for (i, comp) in components.iter().enumerate() {
            for u in g.set_neighborhood(comp) {
                if head.contains(&u) {
                    adjacency.push((i, u));
                }
            }
        }
        let h2 = head
            .iter()
            .copied()
            .filter(|u| g.multiplicity(v, *u) >= 2)
            .collect();
        AuxBipartite {
            v,
            components,
            attachments,
            head: head.clone(),
            adjacency,
            h2,
        }
    }

    pub fn head_degree(&self, u: VertexId) -> usize {
        self.adjacency.iter().filter(|(_, h)| *h == u).count()
    }
}

/// Builds the structure and checks that more than `3k(k + 1)` components
/// were found, which holds whenever `deg(v)` exceeds the degree cap.
pub fn build_aux(g: &MultiGraph, v: VertexId, head: &VertexSet, k: i64) -> Result<AuxBipartite> {
    let aux = AuxBipartite::from_hitting_set(g, v, head);
    let need = 3 * k * (k + 1);
    if aux.components.len() as i64 <= need {
        return Err(Error::internal(format!(
            "only {} components hang off vertex {v}, expected more than {need}",
            aux.components.len()
        )));
    }
    Ok(aux)
}

/// Rule 7: doubles `uv` for the least head `u` seeing at least `k + 2`
/// components.
pub fn fvs_rule_aux_double(g: &mut MultiGraph, k: i64, aux: &AuxBipartite) -> Option<FvsEntry> {
    let v = aux.v;
    let u = aux
        .head
        .iter()
        .copied()
        .find(|u| g.multiplicity(*u, v) < 2 && aux.head_degree(*u) as i64 >= k + 2)?;
    Some(record(g, k, FvsRule::AuxDouble { u, v }))
}

/// Rule 8: cuts `v` from the least component whose other neighbours all lie
/// in `H²_v`.
pub fn fvs_rule_edge_delete(g: &mut MultiGraph, k: i64, aux: &AuxBipartite) -> Option<FvsEntry> {
    let i = (0..aux.components.len()).find(|i| {
        g.set_neighborhood(&aux.components[*i])
            .iter()
            .all(|u| *u == aux.v || aux.h2.contains(u))
    })?;
    let w = aux.attachments[i];
    Some(record(g, k, FvsRule::EdgeDelete { v: aux.v, w }))
}
