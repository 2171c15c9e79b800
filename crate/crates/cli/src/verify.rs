//! Kernel engine against oracle, plus the extension-only and duplicate checks.

use std::collections::BTreeSet;

use enumkernel::oracle::{compare, Comparison, DiffWitness, SolutionSetReport};
use enumkernel::stream::format_solution;
use enumkernel::{MultiGraph, VertexSet};

use crate::engine::{oracle, Kernelized, Problem};

/// Test hook for the fault-injection fixture: drops one kernel solution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Fault {
    pub drop_first: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Diff(String),
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub verdict: Verdict,
    pub no_instance: bool,
    pub kernel_count: u64,
    pub oracle_count: u64,
    pub kernel_n: Option<usize>,
    pub kernel_k: Option<i64>,
    pub extension_violations: u64,
}

fn ids(s: &VertexSet) -> String {
    format!("[{}]", format_solution(s))
}

fn witness_text(w: &DiffWitness) -> String {
    match w {
        DiffWitness::OnlyLeft(s) => format!("only-kernel {}", ids(s)),
        DiffWitness::OnlyRight(s) => format!("only-oracle {}", ids(s)),
        DiffWitness::Duplicate(s) => format!("duplicate {}", ids(s)),
        DiffWitness::Digest {
            left_count,
            right_count,
        } => {
            format!("digest kernel-count {left_count} oracle-count {right_count}")
        }
    }
}

pub fn verify_instance(
    problem: Problem,
    g: &MultiGraph,
    k: i64,
    fault: Fault,
) -> enumkernel::Result<VerifyOutcome> {
    let want = oracle(problem, g, k)?;
    let kernelized = Kernelized::compress(problem, g, k)?;
    let no_instance = matches!(kernelized, Kernelized::NoInstance);
    let kernel_vertices: BTreeSet<_> = kernelized
        .graph()
        .map(|kg| kg.vertices().collect())
        .unwrap_or_default();
    let mut extension_violations = 0;
    let mut first_violation = None;
    let checker = kernelized.clone();
    let stream = kernelized
        .clone()
        .into_stream()
        .skip(usize::from(fault.drop_first));
    let got = SolutionSetReport::collect(stream.inspect(|s| {
        let restricted: VertexSet = s.intersection(&kernel_vertices).copied().collect();
        if !checker.is_kernel_solution(&restricted) {
            extension_violations += 1;
            first_violation.get_or_insert_with(|| {
                format!("not-extension {} restricts to {}", ids(s), ids(&restricted))
            });
        }
    }));
    let verdict = match compare(&got, &want) {
        Comparison::Diff(w) => Verdict::Diff(witness_text(&w)),
        Comparison::Equal => match first_violation {
            Some(text) => Verdict::Diff(text),
            None => Verdict::Equal,
        },
    };
    Ok(VerifyOutcome {
        verdict,
        no_instance,
        kernel_count: got.count,
        oracle_count: want.count,
        kernel_n: kernelized.graph().map(|kg| kg.vertex_count()),
        kernel_k: kernelized.k(),
        extension_violations,
    })
}
