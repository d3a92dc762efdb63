//! Doubling ladder: grow the pattern length, segment count, set size and
//! segment width one axis at a time and watch the charged character
//! queries track sqrt(m) * sum_i sqrt(|T[i]| * k_i) with a stable ratio.
//!
//! ```bash
//! cargo run -p gdmatch --example scaling_ladder
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gdmatch::complexity::predicted_queries;
use gdmatch::gd_core::gen::{random_gd, GenParams};
use gdmatch::gd_core::Pattern;
use gdmatch::grover_sim::QuantumEngine;

fn main() {
    let (base_m, base_n, base_set, base_k) = (8usize, 8usize, 4usize, 4usize);
    println!(
        "{:>4} {:>4} {:>4} {:>4} {:>4} {:>12} {:>14} {:>8}",
        "axis", "m", "n", "set", "k", "char_queries", "predicted", "ratio"
    );
    for axis in ["m", "n", "set", "k"] {
        for factor in [1usize, 2, 4, 8] {
            let (m, n, set, k) = match axis {
                "m" => (base_m * factor, base_n, base_set, base_k),
                "n" => (base_m, base_n * factor, base_set, base_k),
                "set" => (base_m, base_n, base_set * factor, base_k),
                _ => (base_m, base_n, base_set, base_k * factor),
            };
            let params = GenParams {
                segments: n..=n,
                widths: k..=k,
                set_sizes: set..=set,
                alphabet_size: 4,
                pattern_len: 1..=1,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(0xc0de + factor as u64);
            let gd = random_gd(&params, &mut rng).unwrap();
            // a foreign-character pattern keeps the outer search on its
            // full worst-case schedule, so the ratio is content-free
            let pattern = Pattern::new("Z".repeat(m)).unwrap();
            let mut engine = QuantumEngine::ideal(1);
            let report = engine.match_quantum(&gd, &pattern);
            let charged = report.ledger.unwrap().char_queries;
            let predicted = predicted_queries(&gd, &pattern);
            println!(
                "{:>4} {:>4} {:>4} {:>4} {:>4} {:>12} {:>14.1} {:>8.3}",
                axis,
                m,
                n,
                set,
                k,
                charged,
                predicted,
                charged as f64 / predicted
            );
        }
    }
}
