//! Command implementations behind the `gdmatch` binary.
//!
//! Everything here is a plain function from a config struct to an exit
//! code, writing its report to a caller-supplied sink, so integration
//! tests can drive the commands without spawning processes.
//!
//! Exit codes: 0 = matched, 1 = no match, 2 = input error,
//! 3 = engines disagreed during `bench` (a correctness regression, kept
//! distinct so CI can tell it apart from an absent match).

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::complexity;
use crate::gd_core::gen::{generate_random, GenParams};
use crate::gd_core::{GdError, GdString, Metrics, Occurrence, Pattern};
use crate::grover_sim::{QuantumEngine, QueryLedger, SimMode};
use crate::matcher::{self, MatchReport, SubstringHit};

pub const SCHEMA_VERSION: u32 = 1;

/// The four selectable engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Brute,
    Threads,
    GroverIdeal,
    GroverSampled,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Threads => "threads",
            Engine::GroverIdeal => "grover-ideal",
            Engine::GroverSampled => "grover-sampled",
        }
    }

    pub const ALL: [Engine; 4] = [
        Engine::Brute,
        Engine::Threads,
        Engine::GroverIdeal,
        Engine::GroverSampled,
    ];
}

impl FromStr for Engine {
    type Err = GdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Engine::Brute),
            "threads" => Ok(Engine::Threads),
            "grover-ideal" => Ok(Engine::GroverIdeal),
            "grover-sampled" => Ok(Engine::GroverSampled),
            other => Err(GdError::Argument(format!(
                "unknown engine {other:?}; expected brute, threads, grover-ideal or grover-sampled"
            ))),
        }
    }
}

/// Pattern supplied inline or, with a leading `@`, as a one-line file.
#[derive(Debug, Clone)]
pub enum PatternSource {
    Inline(String),
    File(PathBuf),
}

impl PatternSource {
    /// CLI syntax: `@path` reads the pattern from a file, anything else is
    /// the pattern itself.
    pub fn from_arg(arg: &str) -> Self {
        match arg.strip_prefix('@') {
            Some(path) => PatternSource::File(PathBuf::from(path)),
            None => PatternSource::Inline(arg.to_string()),
        }
    }

    fn load(&self) -> Result<Pattern, GdError> {
        match self {
            PatternSource::Inline(s) => Pattern::new(s.clone()),
            PatternSource::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| GdError::Io(format!("{}: {e}", path.display())))?;
                let line = text.lines().next().unwrap_or("").trim_end_matches('\r');
                Pattern::new(line)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub text_path: PathBuf,
    pub pattern: PatternSource,
    pub engine: Engine,
    pub seed: u64,
    pub boost: Option<u64>,
    pub json: bool,
}

#[derive(Serialize)]
struct MetricsJson {
    n: usize,
    #[serde(rename = "N")]
    size: usize,
    #[serde(rename = "W")]
    width: usize,
    cardinality: usize,
}

impl From<Metrics> for MetricsJson {
    fn from(m: Metrics) -> Self {
        MetricsJson {
            n: m.num_segments,
            size: m.size,
            width: m.width,
            cardinality: m.cardinality,
        }
    }
}

#[derive(Serialize)]
struct OccurrenceJson {
    start_column: usize,
    end_column: usize,
    /// 1-based (segment, string) pairs for the spanned segments.
    witness: Vec<(usize, usize)>,
}

impl From<&Occurrence> for OccurrenceJson {
    fn from(o: &Occurrence) -> Self {
        OccurrenceJson {
            start_column: o.start_column,
            end_column: o.end_column,
            witness: o.witness.clone(),
        }
    }
}

#[derive(Serialize)]
struct SubstringJson {
    segment: usize,
    string: usize,
    offset: usize,
}

impl From<&SubstringHit> for SubstringJson {
    fn from(h: &SubstringHit) -> Self {
        SubstringJson {
            segment: h.segment,
            string: h.string,
            offset: h.offset,
        }
    }
}

#[derive(Serialize)]
struct ComplexityJson {
    sum_sqrt: f64,
    bound_rhs: f64,
    predicted_total: f64,
    holds: bool,
    qubits: u64,
    qubit_formula: &'static str,
}

#[derive(Serialize)]
struct RunReportJson {
    schema_version: u32,
    engine: &'static str,
    matched: bool,
    witnesses: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    occurrence: Option<OccurrenceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    substring: Option<SubstringJson>,
    metrics: MetricsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    ledger: Option<QueryLedger>,
    complexity: ComplexityJson,
}

/// Runs one engine against one instance and prints the report.
pub fn cmd_run(cfg: &RunConfig, out: &mut dyn Write) -> i32 {
    match run_inner(cfg, out) {
        Ok(matched) => {
            if matched {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("gdmatch: {e}");
            2
        }
    }
}

fn run_inner(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool, GdError> {
    let text = fs::read_to_string(&cfg.text_path)
        .map_err(|e| GdError::Io(format!("{}: {e}", cfg.text_path.display())))?;
    let gd = GdString::parse(&text)?;
    let pattern = cfg.pattern.load()?;
    let report = run_engine(cfg.engine, &gd, &pattern, cfg.seed, cfg.boost);
    let comp = complexity::report(&gd, &pattern);
    let json = RunReportJson {
        schema_version: SCHEMA_VERSION,
        engine: cfg.engine.name(),
        matched: report.matched,
        witnesses: report.witnesses.iter().copied().collect(),
        occurrence: report.occurrence.as_ref().map(Into::into),
        substring: report.substring.as_ref().map(Into::into),
        metrics: gd.metrics().into(),
        ledger: report.ledger,
        complexity: ComplexityJson {
            sum_sqrt: comp.sum_sqrt,
            bound_rhs: comp.bound_rhs,
            predicted_total: comp.predicted_total,
            holds: comp.holds,
            qubits: comp.qubits,
            qubit_formula: complexity::QUBIT_FORMULA,
        },
    };
    let io = |e: std::io::Error| GdError::Io(e.to_string());
    if cfg.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json).expect("report serializes")
        )
        .map_err(io)?;
    } else {
        write_human(out, &json).map_err(io)?;
    }
    Ok(report.matched)
}

fn write_human(out: &mut dyn Write, r: &RunReportJson) -> std::io::Result<()> {
    writeln!(out, "engine:   {}", r.engine)?;
    writeln!(out, "matched:  {}", r.matched)?;
    if !r.witnesses.is_empty() {
        let w: Vec<String> = r.witnesses.iter().map(|h| h.to_string()).collect();
        writeln!(out, "shifts:   {}", w.join(","))?;
    }
    if let Some(o) = &r.occurrence {
        writeln!(
            out,
            "occurrence: columns {}..{}",
            o.start_column, o.end_column
        )?;
        for (seg, s) in &o.witness {
            writeln!(out, "  segment {seg} string {s}")?;
        }
    }
    if let Some(s) = &r.substring {
        writeln!(
            out,
            "in-string hit: segment {} string {} offset {}",
            s.segment, s.string, s.offset
        )?;
    }
    writeln!(
        out,
        "metrics:  n={} N={} W={} cardinality={}",
        r.metrics.n, r.metrics.size, r.metrics.width, r.metrics.cardinality
    )?;
    if let Some(l) = &r.ledger {
        writeln!(
            out,
            "ledger:   g1={} g2={} g3={} chars={}",
            l.g1_oracle_calls, l.g2_oracle_calls, l.g3_oracle_calls, l.char_queries
        )?;
    }
    writeln!(
        out,
        "analysis: sum_sqrt={:.3} bound={:.3} predicted={:.3} qubits={} ({})",
        r.complexity.sum_sqrt,
        r.complexity.bound_rhs,
        r.complexity.predicted_total,
        r.complexity.qubits,
        r.complexity.qubit_formula,
    )
}

/// Dispatches one engine run; quantum engines get their own seeded
/// generator.
pub fn run_engine(
    engine: Engine,
    gd: &GdString,
    pattern: &Pattern,
    seed: u64,
    boost: Option<u64>,
) -> MatchReport {
    match engine {
        Engine::Brute => {
            let occurrence = matcher::match_bruteforce(gd, pattern);
            MatchReport {
                matched: occurrence.is_some(),
                occurrence,
                ..MatchReport::default()
            }
        }
        Engine::Threads => matcher::match_threads(gd, pattern),
        Engine::GroverIdeal => QuantumEngine::ideal(seed).match_quantum(gd, pattern),
        Engine::GroverSampled => QuantumEngine::new(
            SimMode::Sampled {
                boost_repetitions: boost,
            },
            seed,
        )
        .match_quantum(gd, pattern),
    }
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub params: GenParams,
    pub seed: u64,
    pub out_dir: PathBuf,
}

/// Writes `gd-<seed>.gd` and the sibling `gd-<seed>.pattern` into the
/// output directory. Byte-identical for identical configs.
pub fn cmd_gen(cfg: &GenConfig, out: &mut dyn Write) -> i32 {
    match gen_inner(cfg, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gdmatch: {e}");
            2
        }
    }
}

fn gen_inner(cfg: &GenConfig, out: &mut dyn Write) -> Result<(), GdError> {
    let (gd, pattern) = generate_random(&cfg.params, cfg.seed)?;
    let (text_path, pattern_path) = write_instance(&cfg.out_dir, cfg.seed, &gd, &pattern)?;
    writeln!(out, "{}", text_path.display()).map_err(|e| GdError::Io(e.to_string()))?;
    writeln!(out, "{}", pattern_path.display()).map_err(|e| GdError::Io(e.to_string()))?;
    Ok(())
}

/// Writes one instance pair under `dir`, returning both paths.
pub fn write_instance(
    dir: &Path,
    seed: u64,
    gd: &GdString,
    pattern: &Pattern,
) -> Result<(PathBuf, PathBuf), GdError> {
    fs::create_dir_all(dir).map_err(|e| GdError::Io(format!("{}: {e}", dir.display())))?;
    let text_path = dir.join(format!("gd-{seed}.gd"));
    let pattern_path = dir.join(format!("gd-{seed}.pattern"));
    fs::write(&text_path, gd.to_text())
        .map_err(|e| GdError::Io(format!("{}: {e}", text_path.display())))?;
    fs::write(&pattern_path, format!("{pattern}\n"))
        .map_err(|e| GdError::Io(format!("{}: {e}", pattern_path.display())))?;
    Ok((text_path, pattern_path))
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub corpus: PathBuf,
    pub engines: Vec<Engine>,
    pub reps: u32,
}

/// One corpus entry: a parsed instance and its id (the file stem).
pub struct BenchInstance {
    pub id: String,
    pub gd: GdString,
    pub pattern: Pattern,
}

/// Outcome of one engine run during benchmarking.
pub struct EngineOutcome {
    pub matched: bool,
    pub char_queries: u64,
}

/// Signature of a bench runner: instance plus a per-repetition seed.
pub type BenchRunner = Box<dyn Fn(&GdString, &Pattern, u64) -> EngineOutcome>;

/// A named engine runner; `run` receives the instance and a seed.
pub struct BenchEngine {
    pub name: String,
    pub run: BenchRunner,
}

impl BenchEngine {
    pub fn standard(engine: Engine) -> Self {
        BenchEngine {
            name: engine.name().to_string(),
            run: Box::new(move |gd, p, seed| {
                let report = run_engine(engine, gd, p, seed, None);
                EngineOutcome {
                    matched: report.matched,
                    char_queries: report.ledger.map(|l| l.char_queries).unwrap_or(0),
                }
            }),
        }
    }
}

/// Loads `<stem>.gd` / `<stem>.pattern` pairs, sorted by stem.
pub fn load_corpus(dir: &Path) -> Result<Vec<BenchInstance>, GdError> {
    let entries = fs::read_dir(dir).map_err(|e| GdError::Io(format!("{}: {e}", dir.display())))?;
    let mut instances = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| GdError::Io(e.to_string()))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("gd") {
            continue;
        }
        let sibling = path.with_extension("pattern");
        if !sibling.exists() {
            return Err(GdError::Io(format!(
                "{} has no sibling pattern file",
                path.display()
            )));
        }
        let text = fs::read_to_string(&path)
            .map_err(|e| GdError::Io(format!("{}: {e}", path.display())))?;
        let gd = GdString::parse(&text)?;
        let ptext = fs::read_to_string(&sibling)
            .map_err(|e| GdError::Io(format!("{}: {e}", sibling.display())))?;
        let pattern = Pattern::new(ptext.lines().next().unwrap_or("").trim_end_matches('\r'))?;
        let id = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("instance")
            .to_string();
        instances.push(BenchInstance { id, gd, pattern });
    }
    instances.sort_by(|a, b| a.id.cmp(&b.id));
    if instances.is_empty() {
        return Err(GdError::Io(format!("no .gd files under {}", dir.display())));
    }
    Ok(instances)
}

/// Runs every engine over every instance and emits one CSV row per pair:
///
/// ```text
/// instance,m,n,N,engine,matched,wall_time_s,char_queries,predicted_queries,ratio
/// ```
///
/// followed by a `summary` row whose last column is the max ratio drift:
/// the largest max/min spread of the ratio column within one engine's
/// quantum rows. Returns 3 when the engines disagree on any instance.
pub fn bench_corpus(
    instances: &[BenchInstance],
    engines: &[BenchEngine],
    reps: u32,
    out: &mut dyn Write,
) -> i32 {
    let reps = reps.max(1);
    let mut disagreements = Vec::new();
    let mut ratios: std::collections::BTreeMap<String, Vec<f64>> = Default::default();
    if writeln!(
        out,
        "instance,m,n,N,engine,matched,wall_time_s,char_queries,predicted_queries,ratio"
    )
    .is_err()
    {
        return 2;
    }
    for inst in instances {
        let metrics = inst.gd.metrics();
        let predicted = complexity::predicted_queries(&inst.gd, &inst.pattern);
        let mut verdicts: Vec<(String, bool)> = Vec::new();
        for engine in engines {
            let mut matched = false;
            let mut chars = 0;
            let start = Instant::now();
            for rep in 0..reps {
                let outcome = (engine.run)(&inst.gd, &inst.pattern, rep as u64);
                matched = outcome.matched;
                chars = outcome.char_queries;
            }
            let wall = start.elapsed().as_secs_f64() / reps as f64;
            let ratio = if chars > 0 {
                chars as f64 / predicted
            } else {
                0.0
            };
            if chars > 0 {
                ratios.entry(engine.name.clone()).or_default().push(ratio);
            }
            verdicts.push((engine.name.clone(), matched));
            if writeln!(
                out,
                "{},{},{},{},{},{},{:.6},{},{:.3},{:.3}",
                inst.id,
                inst.pattern.len(),
                metrics.num_segments,
                metrics.size,
                engine.name,
                matched,
                wall,
                chars,
                predicted,
                ratio
            )
            .is_err()
            {
                return 2;
            }
        }
        if verdicts.windows(2).any(|w| w[0].1 != w[1].1) {
            disagreements.push((inst.id.clone(), verdicts));
        }
    }
    let drift = ratios
        .values()
        .filter_map(|rs| {
            let lo = rs.iter().cloned().reduce(f64::min)?;
            let hi = rs.iter().cloned().reduce(f64::max)?;
            (lo > 0.0).then_some(hi / lo)
        })
        .fold(0.0f64, f64::max);
    let _ = writeln!(out, "summary,,,,,,,,,{drift:.3}");
    if !disagreements.is_empty() {
        for (id, verdicts) in &disagreements {
            let detail: Vec<String> = verdicts.iter().map(|(n, m)| format!("{n}={m}")).collect();
            eprintln!("gdmatch: engines disagree on {id}: {}", detail.join(" "));
        }
        return 3;
    }
    0
}

/// Loads the corpus and benchmarks the configured engines.
pub fn cmd_bench(cfg: &BenchConfig, out: &mut dyn Write) -> i32 {
    let instances = match load_corpus(&cfg.corpus) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("gdmatch: {e}");
            return 2;
        }
    };
    let engines: Vec<BenchEngine> = cfg
        .engines
        .iter()
        .map(|&e| BenchEngine::standard(e))
        .collect();
    bench_corpus(&instances, &engines, cfg.reps, out)
}

/// Parses `A..B` (inclusive) or a single `A` into a range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, GdError> {
    let bad = || GdError::Argument(format!("invalid range {s:?}; expected A..B or a single A"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(lo..=hi)
    } else {
        let v: usize = s.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}
