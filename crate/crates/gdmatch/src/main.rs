use std::path::PathBuf;

use clap::{Parser, Subcommand};

use gdmatch::cli::{
    cmd_bench, cmd_gen, cmd_run, parse_range, BenchConfig, Engine, GenConfig, PatternSource,
    RunConfig,
};
use gdmatch::gd_core::gen::GenParams;

/// Decide whether a pattern occurs in a generalized degenerate string.
#[derive(Parser)]
#[command(name = "gdmatch", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Match a pattern against a GD text file with one engine.
    Run {
        /// GD text file (one comma-separated segment per line).
        #[arg(long)]
        text: PathBuf,
        /// Pattern string, or @FILE to read it from a one-line file.
        #[arg(long)]
        pattern: String,
        /// Engine: brute, threads, grover-ideal or grover-sampled.
        #[arg(long)]
        engine: String,
        /// Seed for the quantum engines.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Boost repetitions for grover-sampled (default: auto).
        #[arg(long)]
        boost: Option<u64>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Generate a random instance: a .gd file plus a sibling .pattern file.
    Gen {
        /// Segment count range, e.g. 2..6 or 4.
        #[arg(long)]
        n: String,
        /// Segment width range.
        #[arg(long)]
        k: String,
        /// Strings-per-segment range.
        #[arg(long = "set-size")]
        set_size: String,
        /// Alphabet size (1..=26).
        #[arg(long)]
        alphabet: usize,
        /// Pattern length range.
        #[arg(long)]
        m: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run engines over a generated corpus and emit a CSV cost table.
    Bench {
        /// Directory of .gd/.pattern pairs.
        #[arg(long)]
        corpus: PathBuf,
        /// Comma-separated engine list, e.g. brute,threads,grover-ideal.
        #[arg(long)]
        engines: String,
        /// Timing repetitions per instance.
        #[arg(long, default_value_t = 1)]
        reps: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout();
    let code = match cli.cmd {
        Cmd::Run {
            text,
            pattern,
            engine,
            seed,
            boost,
            json,
        } => {
            let engine = match engine.parse::<Engine>() {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("gdmatch: {e}");
                    std::process::exit(2);
                }
            };
            let cfg = RunConfig {
                text_path: text,
                pattern: PatternSource::from_arg(&pattern),
                engine,
                seed,
                boost,
                json,
            };
            cmd_run(&cfg, &mut stdout)
        }
        Cmd::Gen {
            n,
            k,
            set_size,
            alphabet,
            m,
            seed,
            out,
        } => {
            let params = match (|| -> Result<GenParams, gdmatch::GdError> {
                Ok(GenParams {
                    segments: parse_range(&n)?,
                    widths: parse_range(&k)?,
                    set_sizes: parse_range(&set_size)?,
                    alphabet_size: alphabet,
                    pattern_len: parse_range(&m)?,
                })
            })() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("gdmatch: {e}");
                    std::process::exit(2);
                }
            };
            cmd_gen(
                &GenConfig {
                    params,
                    seed,
                    out_dir: out,
                },
                &mut stdout,
            )
        }
        Cmd::Bench {
            corpus,
            engines,
            reps,
        } => {
            let mut list = Vec::new();
            for name in engines.split(',').filter(|s| !s.is_empty()) {
                match name.trim().parse::<Engine>() {
                    Ok(e) => list.push(e),
                    Err(e) => {
                        eprintln!("gdmatch: {e}");
                        std::process::exit(2);
                    }
                }
            }
            if list.is_empty() {
                eprintln!("gdmatch: --engines must name at least one engine");
                std::process::exit(2);
            }
            cmd_bench(
                &BenchConfig {
                    corpus,
                    engines: list,
                    reps,
                },
                &mut stdout,
            )
        }
    };
    std::process::exit(code);
}
