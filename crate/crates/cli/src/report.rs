use std::io::{self, Write};
use std::time::Duration;

use enumkernel::steps::DelayStats;
use enumkernel::MultiGraph;

/// Summary of one run, written as `key=value` lines.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub n: usize,
    pub m: u64,
    pub k: i64,
    pub kernel_n: Option<usize>,
    pub kernel_k: Option<i64>,
    pub no_instance: Option<bool>,
    pub solutions: Option<u64>,
    pub trace_len: Option<usize>,
    /// Only present for instrumented runs.
    pub delay: Option<DelayStats>,
    pub wall: Duration,
}

impl RunReport {
    pub fn for_input(g: &MultiGraph, k: i64) -> Self {
        RunReport {
            n: g.vertex_count(),
            m: g.total_multiplicity(),
            k,
            ..Default::default()
        }
    }

    pub fn lines(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("n".to_string(), self.n.to_string()),
            ("m".to_string(), self.m.to_string()),
            ("k".to_string(), self.k.to_string()),
        ];
        let mut opt = |key: &str, value: Option<String>| {
            if let Some(v) = value {
                out.push((key.to_string(), v));
            }
        };
        opt("no_instance", self.no_instance.map(|b| b.to_string()));
        opt("kernel_n", self.kernel_n.map(|v| v.to_string()));
        opt("kernel_k", self.kernel_k.map(|v| v.to_string()));
        opt("trace_len", self.trace_len.map(|v| v.to_string()));
        opt("solutions", self.solutions.map(|v| v.to_string()));
        if let Some(d) = &self.delay {
            opt("steps_pre", Some(d.precalculation.to_string()));
            opt("steps_max_between", Some(d.max_between.to_string()));
            opt(
                "steps_mean_between",
                Some(format!("{:.2}", d.mean_between())),
            );
            opt("steps_post", Some(d.postcalculation.to_string()));
        }
        out.push((
            "wall_ms".to_string(),
            format!("{:.3}", self.wall.as_secs_f64() * 1e3),
        ));
        out
    }

    pub fn write_to(&self, w: &mut dyn Write) -> io::Result<()> {
        for (k, v) in self.lines() {
            writeln!(w, "{k}={v}")?;
        }
        Ok(())
    }
}
