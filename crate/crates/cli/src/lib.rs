//! The `enumkernel` command-line tool.
//!
//! Solutions go to the output stream, one per line; reports go to the error
//! stream as `key=value` lines. Exit statuses: 0 success or `Equal`, 2
//! NO-instance, 3 `Diff`, 4 usage error, 1 anything else.

pub mod engine;
pub mod report;
pub mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use enumkernel::graph::random_graph;
use enumkernel::stream::format_solution;
use enumkernel::{steps, MultiGraph, RandomSpec, SolutionStream};
use rayon::prelude::*;
use thiserror::Error;

use engine::{oracle, EngineKind, Kernelized, Problem};
use report::RunReport;
use verify::{verify_instance, Fault, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NO_INSTANCE: i32 = 2;
pub const EXIT_DIFF: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] enumkernel::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(enumkernel::Error::Internal(_))
            | CliError::Core(enumkernel::Error::Structure(_)) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "enumkernel",
    version,
    about = "Enumeration kernels for vertex cover and feedback vertex set"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: u32,
    /// Edge probability.
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability that an edge gets multiplicity two.
    #[arg(long, default_value_t = 0.0)]
    multi: f64,
    /// Probability of a loop at each vertex.
    #[arg(long, default_value_t = 0.0)]
    loops: f64,
}

impl GenArgs {
    fn spec(&self) -> CliResult<RandomSpec> {
        for (name, v) in [
            ("--p", self.p),
            ("--multi", self.multi),
            ("--loops", self.loops),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(CliError::Usage(format!(
                    "{name} must lie in [0, 1], got {v}"
                )));
            }
        }
        Ok(RandomSpec {
            n: self.n,
            p: self.p,
            multi_prob: self.multi,
            loop_prob: self.loops,
            seed: self.seed,
        })
    }
}

#[derive(Debug, Args)]
struct InstanceArgs {
    problem: Problem,
    /// Graph file in the edge-list format, `-` for standard input.
    input: PathBuf,
    #[arg(allow_negative_numbers = true)]
    k: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Writes a seeded random graph.
    Gen {
        #[command(flatten)]
        spec: GenArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compresses an instance and writes the kernel graph.
    Kernelize {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Streams every solution of size at most k.
    Enumerate {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = EngineKind::Kernel)]
        engine: EngineKind,
        #[arg(long)]
        max_solutions: Option<u64>,
        #[arg(long)]
        count_only: bool,
    },
    /// Compares the kernel engine with the oracle.
    Verify {
        problem: Problem,
        input: Option<PathBuf>,
        #[arg(allow_negative_numbers = true)]
        k: Option<i64>,
        /// Checks this many generated instances instead of a file, each for
        /// every k from 0 to n unless k is given.
        #[arg(long, conflicts_with = "input")]
        batch: Option<u64>,
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        multi: f64,
        #[arg(long, default_value_t = 0.0)]
        loops: f64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Instrumented enumeration with step counts between outputs.
    BenchDelay {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        max_solutions: Option<u64>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Gen { spec, out: path } => cmd_gen(&spec.spec()?, path.as_deref(), out),
        Command::Kernelize {
            instance,
            trace_out,
            out: path,
        } => cmd_kernelize(&instance, trace_out.as_deref(), path.as_deref(), out, err),
        Command::Enumerate {
            instance,
            engine,
            max_solutions,
            count_only,
        } => cmd_enumerate(&instance, engine, max_solutions, count_only, out, err),
        Command::Verify {
            problem,
            input,
            k,
            batch,
            n,
            p,
            seed,
            multi,
            loops,
            inject_fault,
        } => {
            let fault = Fault {
                drop_first: inject_fault,
            };
            match (batch, input) {
                (Some(count), _) => {
                    let spec = GenArgs {
                        n,
                        p,
                        seed,
                        multi,
                        loops,
                    }
                    .spec()?;
                    cmd_verify_batch(problem, &spec, count, k, fault, err)
                }
                (None, Some(input)) => {
                    let k = k.ok_or_else(|| CliError::Usage("verify needs k".into()))?;
                    let g = load(problem, &input)?;
                    cmd_verify(problem, &g, k, fault, err)
                }
                (None, None) => Err(CliError::Usage(
                    "verify needs an input file or --batch".into(),
                )),
            }
        }
        Command::BenchDelay {
            instance,
            max_solutions,
        } => cmd_bench_delay(&instance, max_solutions, err),
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(io_error(path))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_error(path))
    }
}

fn load(problem: Problem, path: &Path) -> CliResult<MultiGraph> {
    let g = MultiGraph::parse(&read_input(path)?)?;
    if problem == Problem::Vc && !g.is_simple() {
        return Err(CliError::Usage(format!(
            "{}: vertex cover needs a simple graph (no loops or parallel edges)",
            path.display()
        )));
    }
    Ok(g)
}

fn write_target(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(io_error(p)),
        None => out
            .write_all(text.as_bytes())
            .map_err(io_error(Path::new("<stdout>"))),
    }
}

fn cmd_gen(spec: &RandomSpec, path: Option<&Path>, out: &mut dyn Write) -> CliResult<i32> {
    let g = random_graph(spec);
    write_target(path, &format!("{}\n", g.serialize()), out)?;
    Ok(EXIT_OK)
}

fn cmd_kernelize(
    instance: &InstanceArgs,
    trace_out: Option<&Path>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let g = load(instance.problem, &instance.input)?;
    let start = Instant::now();
    let kernelized = Kernelized::compress(instance.problem, &g, instance.k)?;
    let mut report = RunReport::for_input(&g, instance.k);
    report.wall = start.elapsed();
    report.no_instance = Some(matches!(kernelized, Kernelized::NoInstance));
    report.trace_len = Some(kernelized.trace_len());
    if let Some(t) = trace_out {
        fs::write(t, kernelized.trace_text()).map_err(io_error(t))?;
    }
    let code = match (kernelized.graph(), kernelized.k()) {
        (Some(kg), Some(k)) => {
            report.kernel_n = Some(kg.vertex_count());
            report.kernel_k = Some(k);
            let body = if kg.is_empty() {
                "p 0 0".to_string()
            } else {
                kg.serialize()
            };
            write_target(path, &format!("# k'={k}\n{body}\n"), out)?;
            EXIT_OK
        }
        _ => EXIT_NO_INSTANCE,
    };
    report
        .write_to(err)
        .map_err(io_error(Path::new("<stderr>")))?;
    Ok(code)
}

/// Writes solutions until `limit`; a closed output ends the run quietly.
fn emit(
    stream: impl Iterator<Item = enumkernel::VertexSet>,
    limit: Option<u64>,
    count_only: bool,
    out: &mut dyn Write,
) -> CliResult<u64> {
    let mut count = 0;
    for s in stream.take(limit.map_or(usize::MAX, |l| l as usize)) {
        count += 1;
        if count_only {
            continue;
        }
        match writeln!(out, "{}", format_solution(&s)) {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => break,
            Err(e) => return Err(io_error(Path::new("<stdout>"))(e)),
        }
    }
    if count_only {
        writeln!(out, "{count}").map_err(io_error(Path::new("<stdout>")))?;
    }
    out.flush().map_err(io_error(Path::new("<stdout>")))?;
    Ok(count)
}

fn cmd_enumerate(
    instance: &InstanceArgs,
    engine: EngineKind,
    max_solutions: Option<u64>,
    count_only: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let g = load(instance.problem, &instance.input)?;
    let start = Instant::now();
    let mut report = RunReport::for_input(&g, instance.k);
    let stream = match engine {
        EngineKind::Kernel => {
            let kernelized = Kernelized::compress(instance.problem, &g, instance.k)?;
            report.no_instance = Some(matches!(kernelized, Kernelized::NoInstance));
            report.kernel_n = kernelized.graph().map(|kg| kg.vertex_count());
            report.kernel_k = kernelized.k();
            report.trace_len = Some(kernelized.trace_len());
            kernelized.into_stream()
        }
        EngineKind::Oracle => {
            let found = oracle(instance.problem, &g, instance.k)?;
            SolutionStream::new(found.solutions.unwrap_or_default().into_iter())
        }
    };
    report.solutions = Some(emit(stream, max_solutions, count_only, out)?);
    report.wall = start.elapsed();
    report
        .write_to(err)
        .map_err(io_error(Path::new("<stderr>")))?;
    Ok(EXIT_OK)
}

fn write_verdict(verdict: &Verdict, err: &mut dyn Write) -> io::Result<i32> {
    match verdict {
        Verdict::Equal => {
            writeln!(err, "result=equal")?;
            Ok(EXIT_OK)
        }
        Verdict::Diff(w) => {
            writeln!(err, "result=diff")?;
            writeln!(err, "witness={w}")?;
            Ok(EXIT_DIFF)
        }
    }
}

fn cmd_verify(
    problem: Problem,
    g: &MultiGraph,
    k: i64,
    fault: Fault,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let start = Instant::now();
    let outcome = verify_instance(problem, g, k, fault)?;
    let mut report = RunReport::for_input(g, k);
    report.no_instance = Some(outcome.no_instance);
    report.kernel_n = outcome.kernel_n;
    report.kernel_k = outcome.kernel_k;
    report.solutions = Some(outcome.kernel_count);
    report.wall = start.elapsed();
    let stderr = Path::new("<stderr>");
    report.write_to(err).map_err(io_error(stderr))?;
    writeln!(err, "oracle_solutions={}", outcome.oracle_count).map_err(io_error(stderr))?;
    writeln!(err, "extension_violations={}", outcome.extension_violations)
        .map_err(io_error(stderr))?;
    write_verdict(&outcome.verdict, err).map_err(io_error(stderr))
}

fn cmd_verify_batch(
    problem: Problem,
    spec: &RandomSpec,
    count: u64,
    k: Option<i64>,
    fault: Fault,
    err: &mut dyn Write,
) -> CliResult<i32> {
    if problem == Problem::Vc && (spec.multi_prob > 0.0 || spec.loop_prob > 0.0) {
        return Err(CliError::Usage(
            "vertex cover batches need --multi 0 --loops 0".into(),
        ));
    }
    let start = Instant::now();
    let jobs: Vec<(u64, i64)> = (spec.seed..spec.seed + count)
        .flat_map(|seed| match k {
            Some(k) => vec![(seed, k)],
            None => (0..=spec.n as i64).map(|k| (seed, k)).collect(),
        })
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(seed, k)| {
            let g = random_graph(&RandomSpec {
                seed,
                ..spec.clone()
            });
            verify_instance(problem, &g, k, fault).map(|o| (seed, k, o))
        })
        .collect::<enumkernel::Result<Vec<_>>>()?;
    let diffs: Vec<_> = outcomes
        .iter()
        .filter(|(_, _, o)| o.verdict != Verdict::Equal)
        .collect();
    let stderr = Path::new("<stderr>");
    let mut lines = vec![
        format!("instances={}", outcomes.len()),
        format!("equal={}", outcomes.len() - diffs.len()),
        format!("diff={}", diffs.len()),
        format!(
            "no_instance={}",
            outcomes.iter().filter(|(_, _, o)| o.no_instance).count()
        ),
        format!("wall_ms={:.3}", start.elapsed().as_secs_f64() * 1e3),
    ];
    if let Some((seed, k, o)) = diffs.first() {
        lines.push(format!("first_diff_seed={seed}"));
        lines.push(format!("first_diff_k={k}"));
        if let Verdict::Diff(w) = &o.verdict {
            lines.push(format!("witness={w}"));
        }
    }
    for l in lines {
        writeln!(err, "{l}").map_err(io_error(stderr))?;
    }
    writeln!(
        err,
        "result={}",
        if diffs.is_empty() { "equal" } else { "diff" }
    )
    .map_err(io_error(stderr))?;
    Ok(if diffs.is_empty() { EXIT_OK } else { EXIT_DIFF })
}

fn cmd_bench_delay(
    instance: &InstanceArgs,
    max_solutions: Option<u64>,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let g = load(instance.problem, &instance.input)?;
    let start = Instant::now();
    let mut report = RunReport::for_input(&g, instance.k);
    let before = steps::count();
    let kernelized = Kernelized::compress(instance.problem, &g, instance.k)?;
    let compression = steps::count().wrapping_sub(before);
    report.no_instance = Some(matches!(kernelized, Kernelized::NoInstance));
    report.kernel_n = kernelized.graph().map(|kg| kg.vertex_count());
    report.kernel_k = kernelized.k();
    report.trace_len = Some(kernelized.trace_len());
    let mut stats = steps::measure(kernelized.into_stream(), max_solutions, |_| {});
    stats.precalculation += compression;
    report.solutions = Some(stats.outputs);
    report.delay = Some(stats);
    report.wall = start.elapsed();
    report
        .write_to(err)
        .map_err(io_error(Path::new("<stderr>")))?;
    Ok(EXIT_OK)
}
