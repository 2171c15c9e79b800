//! Lazy subset streams used by the lifting algorithms.

use itertools::Itertools;

use crate::graph::{VertexId, VertexSet};

/// All subsets of `items` with at most `max_size` elements, smallest first.
///
/// Linear delay: each subset is produced by advancing one combination.
pub fn subsets_up_to(
    items: Vec<VertexId>,
    max_size: usize,
) -> impl Iterator<Item = VertexSet> + Send + 'static {
    subsets_in_range(items, 0, max_size)
}

/// All subsets of `items` whose size lies in `min_size..=max_size`.
pub fn subsets_in_range(
    items: Vec<VertexId>,
    min_size: usize,
    max_size: usize,
) -> impl Iterator<Item = VertexSet> + Send + 'static {
    let top = max_size.min(items.len());
    (min_size..=top).flat_map(move |size| {
        items
            .clone()
            .into_iter()
            .combinations(size)
            .map(|c| c.into_iter().collect::<VertexSet>())
    })
}
