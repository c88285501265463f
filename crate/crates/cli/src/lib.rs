//! Command implementations behind the `nmgraph` binary. Each command writes
//! its primary output to the supplied writer and reports failures as a
//! [`Failure`] carrying the process exit code.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use nmgraph::bench::compare_triangle_paths;
use nmgraph::io::{read_matrix, write_matrix, MatrixFormat};
use nmgraph::random::{with_average_degree, Corpus};
use nmgraph::verify::{check_instance, Limits, VerifyReport};
use nmgraph::{
    build_nm, connected_components, fixtures, parse_edge_list, reconstruct_adjacency, Error, Graph,
    StructuralReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Invariant(String),
    Parse(String),
    Io(String),
    InvalidMatrix(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Io(_) => 3,
            Failure::InvalidMatrix(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invariant(msg) => write!(f, "invariant failure: {msg}"),
            Failure::Parse(msg) => write!(f, "parse error: {msg}"),
            Failure::Io(msg) => write!(f, "i/o error: {msg}"),
            Failure::InvalidMatrix(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Writes to `path` when given, otherwise to `out`.
fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read_file(path)?;
    let g =
        parse_edge_list(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(g.sorted_by_label())
}

fn internal(e: Error) -> Failure {
    Failure::Invariant(e.to_string())
}

pub fn compute(
    input: &Path,
    output: Option<&Path>,
    format: MatrixFormat,
    out: &mut dyn Write,
) -> CliResult {
    let g = load_graph(input)?;
    emit(out, output, &write_matrix(&build_nm(&g), format))
}

pub fn reconstruct(input: &Path, output: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let text = read_file(input)?;
    let m = read_matrix(&text).map_err(|e| Failure::Parse(format!("{}: {e}", input.display())))?;
    let g = reconstruct_adjacency(&m).map_err(|e| Failure::InvalidMatrix(e.to_string()))?;
    emit(out, output, &g.to_edge_list())
}

#[derive(Serialize)]
struct InputSummary {
    n: usize,
    m: usize,
    components: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct StageTimings {
    parse_micros: u128,
    build_micros: u128,
    analyze_micros: u128,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeReport {
    input: InputSummary,
    report: StructuralReport,
    timings: StageTimings,
    tool_version: &'static str,
}

/// Key-sorted JSON: `serde_json::Value` objects are ordered maps.
fn sorted_json<T: Serialize>(value: &T) -> CliResult<String> {
    let value: Value = serde_json::to_value(value).map_err(|e| Failure::Io(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&value).map_err(|e| Failure::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn analyze(input: &Path, out: &mut dyn Write) -> CliResult {
    let start = Instant::now();
    let g = load_graph(input)?;
    let parsed = Instant::now();
    let m = build_nm(&g);
    let built = Instant::now();
    let report = StructuralReport::new(&m, &g).map_err(internal)?;
    let analyzed = Instant::now();

    let doc = AnalyzeReport {
        input: InputSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            components: connected_components(&g).count,
        },
        report,
        timings: StageTimings {
            parse_micros: (parsed - start).as_micros(),
            build_micros: (built - parsed).as_micros(),
            analyze_micros: (analyzed - built).as_micros(),
        },
        tool_version: env!("CARGO_PKG_VERSION"),
    };
    emit(out, None, &sorted_json(&doc)?)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub trials: usize,
    pub size: usize,
    pub seed: u64,
    pub self_test: bool,
}

fn render_report(report: &VerifyReport) -> String {
    let mut text = format!("instances: {}\n", report.instances);
    let width = report
        .tallies
        .keys()
        .map(|inv| inv.name().len())
        .max()
        .unwrap_or(0);
    text.push_str(&format!(
        "{:<width$}  {:>6}  {:>6}  {:>7}  status\n",
        "invariant", "passed", "failed", "skipped"
    ));
    for (inv, t) in &report.tallies {
        let status = if t.failed > 0 { "FAIL" } else { "pass" };
        text.push_str(&format!(
            "{:<width$}  {:>6}  {:>6}  {:>7}  {status}\n",
            inv.name(),
            t.passed,
            t.failed,
            t.skipped
        ));
    }
    if let Some((edges, failures)) = &report.counterexample {
        text.push_str("counterexample:\n");
        text.push_str(edges);
        for (inv, detail) in failures {
            text.push_str(&format!("  {inv}: {detail}\n"));
        }
    }
    text
}

/// Runs the invariant suite on the input graph, or on a seeded random corpus
/// when no input is given. Self-test mode checks a deliberately corrupted
/// matrix and must fail.
pub fn verify(input: Option<&Path>, opts: &VerifyOptions, out: &mut dyn Write) -> CliResult {
    let limits = Limits::default();
    let mut report = VerifyReport::default();
    if opts.self_test {
        let g = fixtures::seven_vertex();
        let m = build_nm(&g);
        let corrupted = m.with_entry(0, 1, m.get(0, 1) + 1);
        report.record(&g, check_instance(&g, &corrupted, limits));
    } else if let Some(path) = input {
        let g = load_graph(path)?;
        report.record(&g, check_instance(&g, &build_nm(&g), limits));
    } else {
        for g in Corpus::new(opts.seed, opts.size).take(opts.trials) {
            let m = build_nm(&g);
            report.record(&g, check_instance(&g, &m, limits));
        }
    }
    emit(out, None, &render_report(&report))?;
    if report.all_passed() {
        Ok(())
    } else {
        let failed = report.tallies.values().filter(|t| t.failed > 0).count();
        Err(Failure::Invariant(format!("{failed} invariants failed")))
    }
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub size: usize,
    pub degree: f64,
    pub repetitions: usize,
    pub seed: u64,
}

pub fn bench(opts: &BenchOptions, out: &mut dyn Write) -> CliResult {
    let g = with_average_degree(opts.size, opts.degree, opts.seed);
    let result = compare_triangle_paths(&g, opts.repetitions);
    emit(out, None, &sorted_json(&result)?)?;
    if result.counts_equal {
        Ok(())
    } else {
        Err(Failure::Invariant(
            "triangle counts differ between paths".into(),
        ))
    }
}
