//! Amplitude-amplification analytics: iteration counts, success
//! probabilities (with the mid-band domain padding) and the
//! unknown-count schedule.
//!
//! ```bash
//! cargo run -p gdmatch --example grover_analytics
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gdmatch::grover_sim::{
    closed_form_success, grover_exact_deterministic, grover_unknown, padded_domain,
};

fn main() {
    println!("exact search over K elements with M marked:");
    println!(
        "{:>6} {:>6} {:>8} {:>6} {:>12} {:>12}",
        "K", "M", "searched", "iters", "success", "oracle_calls"
    );
    for (k, m) in [
        (4, 1),
        (16, 1),
        (64, 1),
        (64, 8),
        (2, 1),
        (3, 2),
        (256, 128),
        (9, 9),
    ] {
        let run = grover_exact_deterministic(|i| i < m, k).unwrap();
        println!(
            "{:>6} {:>6} {:>8} {:>6} {:>12.6} {:>12}",
            k, m, run.domain_size, run.iterations, run.success_probability, run.oracle_calls
        );
        debug_assert_eq!(run.domain_size, padded_domain(k, m));
        debug_assert!(
            (run.success_probability
                - closed_form_success(run.domain_size, run.marked_count, run.iterations))
            .abs()
                < 1e-12
        );
    }

    println!("\nunknown marked count: geometric schedule with verified measurements");
    println!(
        "{:>6} {:>6} {:>8} {:>8} {:>12}",
        "K", "M", "outcome", "iters", "oracle_calls"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (k, m) in [(16u64, 4u64), (64, 1), (128, 0), (32, 32)] {
        let run = grover_unknown(|i| i < m, k, &mut rng).unwrap();
        println!(
            "{:>6} {:>6} {:>8} {:>8} {:>12}",
            k,
            m,
            run.outcome
                .map(|i| i.to_string())
                .unwrap_or_else(|| "none".into()),
            run.iterations,
            run.oracle_calls
        );
    }
}
