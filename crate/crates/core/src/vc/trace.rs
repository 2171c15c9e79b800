//! Text form of vertex cover traces, in the same line format as the feedback
//! vertex set traces: `isolated k=.. v=..` and `crown k=.. k'=.. head=..
//! crown=.. matching=.. head-body=.. graph=..`. Edge lists are
//! comma-separated `u-v` pairs.

use std::collections::BTreeMap;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;

use crate::crown::Matching;
use crate::error::{Error, Result};
use crate::fvs::trace::{graph_text, set_text};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::vc::kernel::{VcTrace, VcTraceEntry};

fn pairs_text<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> String {
    let items: Vec<String> = pairs.into_iter().map(|(a, b)| format!("{a}-{b}")).collect();
    if items.is_empty() {
        "-".into()
    } else {
        items.join(",")
    }
}

impl VcTraceEntry {
    pub fn to_line(&self) -> String {
        match self {
            VcTraceEntry::IsolatedRemoved { v, k } => format!("isolated k={k} v={v}"),
            VcTraceEntry::CrownApplied {
                crown_graph,
                head,
                crown,
                matching,
                head_body_edges,
                k_before,
                k_after,
            } => format!(
                "crown k={k_before} k'={k_after} head={} crown={} matching={} head-body={} graph={}",
                set_text(head),
                set_text(crown),
                pairs_text(matching.pairs()),
                pairs_text(head_body_edges.iter().copied()),
                graph_text(crown_graph)
            ),
        }
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<VcTraceEntry> {
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
        let id = |t: &str| -> Result<VertexId> {
            t.parse().map_err(|_| perr(format!("bad vertex id `{t}`")))
        };
        let set = |k: &str| -> Result<VertexSet> {
            match get(k)? {
                "-" => Ok(VertexSet::new()),
                s => s.split(',').map(id).collect(),
            }
        };
        let pairs = |k: &str| -> Result<Vec<(VertexId, VertexId)>> {
            match get(k)? {
                "-" => Ok(Vec::new()),
                s => s
                    .split(',')
                    .map(|p| {
                        let (a, b) = p
                            .split_once('-')
                            .ok_or_else(|| perr(format!("bad pair `{p}` in `{k}`")))?;
                        Ok((id(a)?, id(b)?))
                    })
                    .collect(),
            }
        };
        match tag {
            "isolated" => Ok(VcTraceEntry::IsolatedRemoved {
                v: id(get("v")?)?,
                k: int("k")?,
            }),
            "crown" => {
                let bytes = STANDARD
                    .decode(get("graph")?)
                    .map_err(|e| perr(format!("bad base-64 in `graph`: {e}")))?;
                let text =
                    String::from_utf8(bytes).map_err(|_| perr("graph is not UTF-8".into()))?;
                let crown_graph =
                    MultiGraph::parse(&text).map_err(|e| perr(format!("embedded graph: {e}")))?;
                let matching =
                    Matching::from_pairs(pairs("matching")?).map_err(|e| perr(e.to_string()))?;
                Ok(VcTraceEntry::CrownApplied {
                    crown_graph,
                    head: set("head")?,
                    crown: set("crown")?,
                    matching,
                    head_body_edges: pairs("head-body")?,
                    k_before: int("k")?,
                    k_after: int("k'")?,
                })
            }
            other => Err(perr(format!("unknown trace tag `{other}`"))),
        }
    }
}

pub fn serialize_vc_trace(trace: &[VcTraceEntry]) -> String {
    let mut out = String::new();
    for e in trace {
        out.push_str(&e.to_line());
        out.push('\n');
    }
    out
}

pub fn parse_vc_trace(text: &str) -> Result<VcTrace> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| VcTraceEntry::parse_line(l, i + 1))
        .collect()
}
