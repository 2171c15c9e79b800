use std::fmt;

use crate::graph::VertexSet;

/// A pull-based stream of solutions.
///
/// Each call to `next` performs only the work needed to reach the following
/// solution; streams are single-consumer and own all of their state.
pub struct SolutionStream {
    inner: Box<dyn Iterator<Item = VertexSet> + Send>,
}

impl SolutionStream {
    pub fn new<I>(iter: I) -> Self
    where
        I: Iterator<Item = VertexSet> + Send + 'static,
    {
        SolutionStream {
            inner: Box::new(iter),
        }
    }

    pub fn empty() -> Self {
        SolutionStream::new(std::iter::empty())
    }

    pub fn once(solution: VertexSet) -> Self {
        SolutionStream::new(std::iter::once(solution))
    }
}

impl Iterator for SolutionStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next()
    }
}

impl fmt::Debug for SolutionStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SolutionStream { .. }")
    }
}

/// Formats a solution in the shared stream format: sorted ids separated by a
/// single space, the empty set as an empty string.
pub fn format_solution(solution: &VertexSet) -> String {
    let mut out = String::new();
    for (i, v) in solution.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}
