//! Uniform access to both kernels and both oracles.

use clap::ValueEnum;
use enumkernel::fvs::{self, FvsCompression, FvsKernel};
use enumkernel::oracle::{brute_fvs, brute_vc, SolutionSetReport};
use enumkernel::vc::{self, VcCompression, VcKernel};
use enumkernel::{MultiGraph, SolutionStream, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Vc,
    Fvs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineKind {
    Kernel,
    Oracle,
}

#[derive(Debug, Clone)]
pub enum Kernelized {
    NoInstance,
    Vc(VcKernel),
    Fvs(FvsKernel),
}

impl Kernelized {
    pub fn compress(problem: Problem, g: &MultiGraph, k: i64) -> enumkernel::Result<Kernelized> {
        Ok(match problem {
            Problem::Vc => match vc::vc_compress(g, k)? {
                VcCompression::NoInstance => Kernelized::NoInstance,
                VcCompression::Kernel(kernel) => Kernelized::Vc(kernel),
            },
            Problem::Fvs => match fvs::fvs_compress(g, k)? {
                FvsCompression::NoInstance => Kernelized::NoInstance,
                FvsCompression::Kernel(kernel) => Kernelized::Fvs(kernel),
            },
        })
    }

    pub fn graph(&self) -> Option<&MultiGraph> {
        match self {
            Kernelized::NoInstance => None,
            Kernelized::Vc(kernel) => Some(&kernel.graph),
            Kernelized::Fvs(kernel) => Some(&kernel.graph),
        }
    }

    pub fn k(&self) -> Option<i64> {
        match self {
            Kernelized::NoInstance => None,
            Kernelized::Vc(kernel) => Some(kernel.k),
            Kernelized::Fvs(kernel) => Some(kernel.k),
        }
    }

    pub fn trace_len(&self) -> usize {
        match self {
            Kernelized::NoInstance => 0,
            Kernelized::Vc(kernel) => kernel.trace.len(),
            Kernelized::Fvs(kernel) => kernel.trace.len(),
        }
    }

    pub fn trace_text(&self) -> String {
        match self {
            Kernelized::NoInstance => String::new(),
            Kernelized::Vc(kernel) => vc::serialize_vc_trace(&kernel.trace),
            Kernelized::Fvs(kernel) => fvs::serialize_trace(&kernel.trace),
        }
    }

    /// Whether `s` is a solution of the kernel instance.
    pub fn is_kernel_solution(&self, s: &VertexSet) -> bool {
        match self {
            Kernelized::NoInstance => false,
            Kernelized::Vc(kernel) => s.len() as i64 <= kernel.k && kernel.graph.is_vertex_cover(s),
            Kernelized::Fvs(kernel) => s.len() as i64 <= kernel.k && kernel.graph.is_forest(s),
        }
    }

    pub fn into_stream(self) -> SolutionStream {
        match self {
            Kernelized::NoInstance => SolutionStream::empty(),
            Kernelized::Vc(kernel) => vc::enumerate_kernel(kernel),
            Kernelized::Fvs(kernel) => fvs::enumerate_fvs_kernel(kernel),
        }
    }
}

pub fn oracle(problem: Problem, g: &MultiGraph, k: i64) -> enumkernel::Result<SolutionSetReport> {
    match problem {
        Problem::Vc => brute_vc(g, k),
        Problem::Fvs => brute_fvs(g, k),
    }
}
