//! Integration tests for the command layer: report schema, exit codes,
//! deterministic generation and the bench disagreement gate.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use gdmatch::cli::{
    bench_corpus, cmd_bench, cmd_gen, cmd_run, load_corpus, parse_range, BenchConfig, BenchEngine,
    Engine, EngineOutcome, GenConfig, PatternSource, RunConfig,
};
use gdmatch::gd_core::gen::GenParams;
use gdmatch::gd_core::GdString;
use gdmatch::sample::{DNA_DEMO, DNA_DEMO_PATTERN};

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gdmatch-test-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_demo(dir: &Path) -> PathBuf {
    let path = dir.join("demo.gd");
    fs::write(&path, DNA_DEMO).unwrap();
    path
}

fn run_cfg(text: PathBuf, pattern: &str, engine: Engine, json: bool) -> RunConfig {
    RunConfig {
        text_path: text,
        pattern: PatternSource::from_arg(pattern),
        engine,
        seed: 0,
        boost: None,
        json,
    }
}

#[test]
fn run_brute_reports_occurrence_as_json() {
    let dir = temp_dir("run-brute");
    let text = write_demo(&dir);
    let mut out = Vec::new();
    let code = cmd_run(
        &run_cfg(text, DNA_DEMO_PATTERN, Engine::Brute, true),
        &mut out,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["engine"], "brute");
    assert_eq!(v["matched"], true);
    assert_eq!(v["occurrence"]["start_column"], 6);
    assert_eq!(v["occurrence"]["end_column"], 12);
    assert_eq!(v["metrics"]["n"], 5);
    assert_eq!(v["metrics"]["N"], 42);
    assert_eq!(v["metrics"]["W"], 17);
    assert_eq!(v["metrics"]["cardinality"], 13);
    assert!(v["complexity"]["holds"].as_bool().unwrap());
    assert!(v.get("ledger").is_none());
}

#[test]
fn run_threads_reports_witness_shift() {
    let dir = temp_dir("run-threads");
    let text = write_demo(&dir);
    let mut out = Vec::new();
    let code = cmd_run(
        &run_cfg(text, DNA_DEMO_PATTERN, Engine::Threads, true),
        &mut out,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert!(v["witnesses"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(5)));
}

#[test]
fn run_quantum_engines_attach_ledger() {
    let dir = temp_dir("run-quantum");
    let text = write_demo(&dir);
    for engine in [Engine::GroverIdeal, Engine::GroverSampled] {
        let mut out = Vec::new();
        let code = cmd_run(
            &run_cfg(text.clone(), DNA_DEMO_PATTERN, engine, true),
            &mut out,
        );
        assert_eq!(code, 0, "engine {}", engine.name());
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert!(v["ledger"]["char_queries"].as_u64().unwrap() > 0);
    }
}

#[test]
fn run_without_match_exits_one() {
    let dir = temp_dir("run-miss");
    let text = write_demo(&dir);
    let mut out = Vec::new();
    let code = cmd_run(&run_cfg(text, "ZZZZ", Engine::Threads, false), &mut out);
    assert_eq!(code, 1);
}

#[test]
fn run_with_bad_input_exits_two() {
    let dir = temp_dir("run-bad");
    let path = dir.join("broken.gd");
    fs::write(&path, "ACG,TAA\nGAT,CGGT\n").unwrap();
    let mut out = Vec::new();
    let code = cmd_run(&run_cfg(path, "ACG", Engine::Brute, false), &mut out);
    assert_eq!(code, 2);
    // the parse error itself names the offending line
    let err = GdString::parse("ACG,TAA\nGAT,CGGT\n").unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");

    let mut out = Vec::new();
    let code = cmd_run(
        &run_cfg(dir.join("missing.gd"), "ACG", Engine::Brute, false),
        &mut out,
    );
    assert_eq!(code, 2);
}

#[test]
fn pattern_can_come_from_file() {
    let dir = temp_dir("run-patfile");
    let text = write_demo(&dir);
    let pat = dir.join("p.txt");
    fs::write(&pat, format!("{DNA_DEMO_PATTERN}\n")).unwrap();
    let mut out = Vec::new();
    let code = cmd_run(
        &run_cfg(text, &format!("@{}", pat.display()), Engine::Brute, false),
        &mut out,
    );
    assert_eq!(code, 0);
}

#[test]
fn gen_is_deterministic_and_lossless() {
    let params = GenParams {
        segments: 2..=5,
        widths: 1..=4,
        set_sizes: 1..=3,
        alphabet_size: 4,
        pattern_len: 2..=6,
    };
    let dir_a = temp_dir("gen-a");
    let dir_b = temp_dir("gen-b");
    for dir in [&dir_a, &dir_b] {
        let mut out = Vec::new();
        let code = cmd_gen(
            &GenConfig {
                params: params.clone(),
                seed: 11,
                out_dir: dir.clone(),
            },
            &mut out,
        );
        assert_eq!(code, 0);
    }
    let text_a = fs::read(dir_a.join("gd-11.gd")).unwrap();
    let text_b = fs::read(dir_b.join("gd-11.gd")).unwrap();
    assert_eq!(text_a, text_b);
    let pat_a = fs::read(dir_a.join("gd-11.pattern")).unwrap();
    let pat_b = fs::read(dir_b.join("gd-11.pattern")).unwrap();
    assert_eq!(pat_a, pat_b);

    // the written file re-parses losslessly and satisfies the ranges
    let gd = GdString::parse(std::str::from_utf8(&text_a).unwrap()).unwrap();
    assert_eq!(gd.to_text().as_bytes(), text_a.as_slice());
    let m = gd.metrics();
    assert!((2..=5).contains(&m.num_segments));
    for seg in gd.segments() {
        assert!((1..=4).contains(&seg.width()));
        assert!((1..=3).contains(&seg.len()));
    }
}

#[test]
fn bench_agreeing_engines_exit_zero() {
    let dir = temp_dir("bench-ok");
    let params = GenParams {
        segments: 1..=4,
        widths: 1..=4,
        set_sizes: 1..=3,
        alphabet_size: 3,
        pattern_len: 1..=6,
    };
    for seed in 1..=4 {
        let mut out = Vec::new();
        assert_eq!(
            cmd_gen(
                &GenConfig {
                    params: params.clone(),
                    seed,
                    out_dir: dir.clone()
                },
                &mut out
            ),
            0
        );
    }
    let mut out = Vec::new();
    let code = cmd_bench(
        &BenchConfig {
            corpus: dir,
            engines: Engine::ALL.to_vec(),
            reps: 2,
        },
        &mut out,
    );
    assert_eq!(code, 0);
    let csv = String::from_utf8(out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance,m,n,N,engine,matched,wall_time_s,char_queries,predicted_queries,ratio"
    );
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 4 * 4 + 1); // 4 instances x 4 engines + summary
    assert!(body.last().unwrap().starts_with("summary,"));
}

#[test]
fn bench_disagreement_exits_three() {
    let dir = temp_dir("bench-bad");
    let params = GenParams {
        segments: 1..=3,
        widths: 1..=3,
        set_sizes: 1..=2,
        alphabet_size: 2,
        pattern_len: 1..=4,
    };
    let mut out = Vec::new();
    assert_eq!(
        cmd_gen(
            &GenConfig {
                params,
                seed: 3,
                out_dir: dir.clone()
            },
            &mut out
        ),
        0
    );
    let instances = load_corpus(&dir).unwrap();
    // fault injection: an engine that inverts the true verdict
    let engines = vec![
        BenchEngine::standard(Engine::Brute),
        BenchEngine {
            name: "mutated".into(),
            run: Box::new(|gd, p, _| EngineOutcome {
                matched: gdmatch::matcher::match_bruteforce(gd, p).is_none(),
                char_queries: 0,
            }),
        },
    ];
    let mut out = Vec::new();
    let code = bench_corpus(&instances, &engines, 1, &mut out);
    assert_eq!(code, 3);
}

#[test]
fn bench_missing_corpus_exits_two() {
    let mut out = Vec::new();
    let code = cmd_bench(
        &BenchConfig {
            corpus: PathBuf::from("/nonexistent-gdmatch-corpus"),
            engines: vec![Engine::Brute],
            reps: 1,
        },
        &mut out,
    );
    assert_eq!(code, 2);
}

#[test]
fn binary_smoke() {
    let dir = temp_dir("bin");
    let text = write_demo(&dir);
    let out = Command::new(env!("CARGO_BIN_EXE_gdmatch"))
        .args([
            "run",
            "--text",
            text.to_str().unwrap(),
            "--pattern",
            DNA_DEMO_PATTERN,
            "--engine",
            "grover-ideal",
            "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["matched"], true);
    assert_eq!(v["witnesses"][0], 5);

    let out = Command::new(env!("CARGO_BIN_EXE_gdmatch"))
        .args([
            "run",
            "--text",
            text.to_str().unwrap(),
            "--pattern",
            "QQQ",
            "--engine",
            "brute",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(env!("CARGO_BIN_EXE_gdmatch"))
        .args([
            "run",
            "--text",
            "/no/such/file.gd",
            "--pattern",
            "A",
            "--engine",
            "brute",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn range_syntax_is_shared_by_gen_flags() {
    assert_eq!(parse_range("1..6").unwrap(), 1..=6);
    assert!(parse_range("..").is_err());
}
