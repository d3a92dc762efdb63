//! The two inner search levels in isolation: character-mismatch equality
//! checks and segment membership under the three probe orientations, with
//! the query ledger they charge.
//!
//! ```bash
//! cargo run -p gdmatch --example nested_search
//! ```

use gdmatch::grover_sim::{oracle_f3, Orientation, QuantumEngine};
use gdmatch::sample::{dna_demo, dna_demo_pattern};

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn main() {
    let gd = dna_demo();
    let pattern = dna_demo_pattern();
    let mut engine = QuantumEngine::ideal(0);

    println!("string equality by mismatch search:");
    for (a, b) in [("GT", "GT"), ("GATC", "CGGT"), ("TAAGT", "TAAGA")] {
        let equal = engine.string_equal_grover(&chars(a), &chars(b)).unwrap();
        println!("  {a:>6} vs {b:<6} -> equal={equal}");
    }

    println!("\nsegment membership (segment 3 holds AC, GT, CA; segment 4 TAAGT, ATGCA):");
    let queries = [
        (2usize, "GT", Orientation::Exact),
        (2, "GG", Orientation::Exact),
        (3, "TAA", Orientation::Prefix),
        (1, "GT", Orientation::Suffix),
    ];
    for (seg, probe, orient) in queries {
        let hit = engine
            .segment_member_grover(&gd, seg, &chars(probe), orient)
            .unwrap();
        println!("  segment {} probe {probe:>4} {orient:?} -> {hit}", seg + 1);
    }

    println!("\nmismatch oracle over segment 3's string GT against the pattern after j=2:");
    let f3 = oracle_f3(&gd, 2, 1, &pattern, 2);
    for c in 0..2 {
        println!("  offset {c}: mismatch={}", f3(c));
    }

    let l = engine.ledger;
    println!(
        "\ncharged so far: g2={} g3={} char_queries={}",
        l.g2_oracle_calls, l.g3_oracle_calls, l.char_queries
    );
}
