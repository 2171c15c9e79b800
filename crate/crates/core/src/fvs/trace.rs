//! Reduction traces of the feedback vertex set kernel and their text form.
//!
//! One entry per line: a tag followed by `key=value` fields. Vertex sets are
//! comma-separated ids (`-` for the empty set) and context graphs are the
//! edge-list format, base-64 encoded.

use std::collections::BTreeMap;
use std::sync::Arc;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FvsRule {
    /// 1.i: multiplicity of `uv` capped at two.
    Normalize { u: VertexId, v: VertexId },
    /// 1.ii: `v` had degree at most one.
    LowDegree { v: VertexId },
    /// 1.iii: `u` and `v` had `k + 2` common neighbours; `uv` doubled.
    CommonNeighbors { u: VertexId, v: VertexId },
    /// 1.iv and 6: `v` lies in every solution.
    Mandatory { v: VertexId },
    /// 2: `x` contracted into `a` on the induced path `a – x – b`.
    ShortPath {
        a: VertexId,
        x: VertexId,
        b: VertexId,
        context: Arc<MultiGraph>,
    },
    /// 3: `y` contracted into `x` in the pendant triangle `u x y`.
    TwinTriangle {
        u: VertexId,
        x: VertexId,
        y: VertexId,
    },
    /// 4: `u` and its pendant double-edge neighbours removed.
    PendingDoubles {
        u: VertexId,
        eps: VertexSet,
        context: Arc<MultiGraph>,
    },
    /// 5: `N[b]` removed.
    MultiFlag {
        a: VertexId,
        b: VertexId,
        eps: VertexSet,
        context: Arc<MultiGraph>,
    },
    /// 6: `v` had a flower of order `k + 1`.
    Flower { v: VertexId },
    /// 7: `uv` doubled.
    AuxDouble { u: VertexId, v: VertexId },
    /// 8: edge `vw` deleted.
    EdgeDelete { v: VertexId, w: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsEntry {
    pub rule: FvsRule,
    pub k_before: i64,
    pub k_after: i64,
}

pub type FvsTrace = Vec<FvsEntry>;

impl FvsRule {
    pub fn tag(&self) -> &'static str {
        match self {
            FvsRule::Normalize { .. } => "normalize",
            FvsRule::LowDegree { .. } => "low-degree",
            FvsRule::CommonNeighbors { .. } => "common-neighbors",
            FvsRule::Mandatory { .. } => "mandatory",
            FvsRule::ShortPath { .. } => "short-path",
            FvsRule::TwinTriangle { .. } => "twin-triangle",
            FvsRule::PendingDoubles { .. } => "pending-doubles",
            FvsRule::MultiFlag { .. } => "multi-flag",
            FvsRule::Flower { .. } => "flower",
            FvsRule::AuxDouble { .. } => "aux-double",
            FvsRule::EdgeDelete { .. } => "edge-delete",
        }
    }
}

pub(crate) fn set_text(s: &VertexSet) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn graph_text(g: &MultiGraph) -> String {
    STANDARD.encode(g.serialize())
}

impl FvsEntry {
    pub fn to_line(&self) -> String {
        let mut fields: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| fields.push((k.to_string(), v));
        match &self.rule {
            FvsRule::Normalize { u, v }
            | FvsRule::CommonNeighbors { u, v }
            | FvsRule::AuxDouble { u, v } => {
                put("u", u.to_string());
                put("v", v.to_string());
            }
            FvsRule::LowDegree { v } | FvsRule::Mandatory { v } | FvsRule::Flower { v } => {
                put("v", v.to_string())
            }
            FvsRule::ShortPath { a, x, b, context } => {
                put("a", a.to_string());
                put("x", x.to_string());
                put("b", b.to_string());
                put("graph", graph_text(context));
            }
            FvsRule::TwinTriangle { u, x, y } => {
                put("u", u.to_string());
                put("x", x.to_string());
                put("y", y.to_string());
            }
            FvsRule::PendingDoubles { u, eps, context } => {
                put("u", u.to_string());
                put("eps", set_text(eps));
                put("graph", graph_text(context));
            }
            FvsRule::MultiFlag { a, b, eps, context } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("eps", set_text(eps));
                put("graph", graph_text(context));
            }
            FvsRule::EdgeDelete { v, w } => {
                put("v", v.to_string());
                put("w", w.to_string());
            }
        }
        let mut line = format!(
            "{} k={} k'={}",
            self.rule.tag(),
            self.k_before,
            self.k_after
        );
        for (k, v) in fields {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<FvsEntry> {
        let perr = |m: String| Error::Parse {
            line: line_no,
            message: m,
        };
        let mut parts = line.split_whitespace();
        let tag = parts
            .next()
            .ok_or_else(|| perr("empty trace line".into()))?;
        let mut fields = BTreeMap::new();
        for p in parts {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| perr(format!("field `{p}` is not key=value")))?;
            fields.insert(k, v);
        }
        let get = |k: &str| -> Result<&str> {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| perr(format!("missing field `{k}`")))
        };
        let int = |k: &str| -> Result<i64> {
            get(k)?
                .parse()
                .map_err(|_| perr(format!("field `{k}` is not an integer")))
        };
        let id = |k: &str| -> Result<VertexId> {
            get(k)?
                .parse()
                .map_err(|_| perr(format!("field `{k}` is not a vertex id")))
        };
        let set = |k: &str| -> Result<VertexSet> {
            let s = get(k)?;
            if s == "-" {
                return Ok(VertexSet::new());
            }
            s.split(',')
                .map(|t| {
                    t.parse()
                        .map_err(|_| perr(format!("bad id `{t}` in `{k}`")))
                })
                .collect()
        };
        let graph = |k: &str| -> Result<Arc<MultiGraph>> {
            let bytes = STANDARD
                .decode(get(k)?)
                .map_err(|e| perr(format!("bad base-64 in `{k}`: {e}")))?;
            let text = String::from_utf8(bytes).map_err(|_| perr("graph is not UTF-8".into()))?;
            MultiGraph::parse(&text)
                .map(Arc::new)
                .map_err(|e| perr(format!("embedded graph: {e}")))
        };
        let rule = match tag {
            "normalize" => FvsRule::Normalize {
                u: id("u")?,
                v: id("v")?,
            },
            "low-degree" => FvsRule::LowDegree { v: id("v")? },
            "common-neighbors" => FvsRule::CommonNeighbors {
                u: id("u")?,
                v: id("v")?,
            },
            "mandatory" => FvsRule::Mandatory { v: id("v")? },
            "short-path" => FvsRule::ShortPath {
                a: id("a")?,
                x: id("x")?,
                b: id("b")?,
                context: graph("graph")?,
            },
            "twin-triangle" => FvsRule::TwinTriangle {
                u: id("u")?,
                x: id("x")?,
                y: id("y")?,
            },
            "pending-doubles" => FvsRule::PendingDoubles {
                u: id("u")?,
                eps: set("eps")?,
                context: graph("graph")?,
            },
            "multi-flag" => FvsRule::MultiFlag {
                a: id("a")?,
                b: id("b")?,
                eps: set("eps")?,
                context: graph("graph")?,
            },
            "flower" => FvsRule::Flower { v: id("v")? },
            "aux-double" => FvsRule::AuxDouble {
                u: id("u")?,
                v: id("v")?,
            },
            "edge-delete" => FvsRule::EdgeDelete {
                v: id("v")?,
                w: id("w")?,
            },
            other => return Err(perr(format!("unknown trace tag `{other}`"))),
        };
        Ok(FvsEntry {
            rule,
            k_before: int("k")?,
            k_after: int("k'")?,
        })
    }
}

pub fn serialize_trace(trace: &[FvsEntry]) -> String {
    let mut out = String::new();
    for e in trace {
        out.push_str(&e.to_line());
        out.push('\n');
    }
    out
}

pub fn parse_trace(text: &str) -> Result<FvsTrace> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| FvsEntry::parse_line(l, i + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    #[test]
    fn round_trip_every_tag() {
        let g = Arc::new(MultiGraph::parse("p 3 3\ne 1 2 2\ne 2 3").unwrap());
        let v = VertexId;
        let rules = vec![
            FvsRule::Normalize { u: v(1), v: v(2) },
            FvsRule::LowDegree { v: v(3) },
            FvsRule::CommonNeighbors { u: v(1), v: v(4) },
            FvsRule::Mandatory { v: v(2) },
            FvsRule::ShortPath {
                a: v(1),
                x: v(2),
                b: v(3),
                context: g.clone(),
            },
            FvsRule::TwinTriangle {
                u: v(1),
                x: v(2),
                y: v(3),
            },
            FvsRule::PendingDoubles {
                u: v(1),
                eps: vset([2, 5]),
                context: g.clone(),
            },
            FvsRule::MultiFlag {
                a: v(1),
                b: v(2),
                eps: vset([]),
                context: g,
            },
            FvsRule::Flower { v: v(9) },
            FvsRule::AuxDouble { u: v(1), v: v(2) },
            FvsRule::EdgeDelete { v: v(1), w: v(7) },
        ];
        let trace: FvsTrace = rules
            .into_iter()
            .enumerate()
            .map(|(i, rule)| FvsEntry {
                rule,
                k_before: i as i64,
                k_after: i as i64 - 1,
            })
            .collect();
        let text = serialize_trace(&trace);
        assert_eq!(text.lines().count(), 11);
        assert_eq!(parse_trace(&text).unwrap(), trace);
        assert_eq!(trace[1].to_line(), "low-degree k=1 k'=0 v=3");
    }

    #[test]
    fn bad_lines() {
        assert!(matches!(
            parse_trace("flower k=1 k'=0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_trace("nope k=1 k'=0 v=1").is_err());
        assert!(parse_trace("flower k=x k'=0 v=1").is_err());
    }
}
