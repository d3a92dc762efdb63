//! Build a small random corpus on disk and benchmark every engine over
//! it, emitting the CSV cost table (one row per instance/engine pair plus
//! a summary row with the ratio drift).
//!
//! ```bash
//! cargo run -p gdmatch --example generate_corpus
//! ```

use gdmatch::cli::{bench_corpus, load_corpus, write_instance, BenchEngine, Engine};
use gdmatch::gd_core::gen::{generate_random, GenParams};

fn main() {
    let dir = std::env::temp_dir().join("gdmatch-example-corpus");
    let _ = std::fs::remove_dir_all(&dir);
    let params = GenParams {
        segments: 2..=6,
        widths: 1..=5,
        set_sizes: 1..=4,
        alphabet_size: 4,
        pattern_len: 2..=8,
    };
    for seed in 1..=6u64 {
        let (gd, pattern) = generate_random(&params, seed).unwrap();
        write_instance(&dir, seed, &gd, &pattern).unwrap();
    }
    println!("# corpus written to {}", dir.display());

    let instances = load_corpus(&dir).unwrap();
    let engines: Vec<BenchEngine> = Engine::ALL
        .iter()
        .map(|&e| BenchEngine::standard(e))
        .collect();
    let mut stdout = std::io::stdout();
    let code = bench_corpus(&instances, &engines, 3, &mut stdout);
    assert_eq!(code, 0, "engines must agree");
}
