//! The analytic side: per-segment square-root sums against the
//! sqrt(n * N) bound (tight exactly for uniform products), the per-run
//! query prediction and the working-register estimate.
//!
//! ```bash
//! cargo run -p gdmatch --example complexity_bounds
//! ```

use gdmatch::complexity::{self, QUBIT_FORMULA};
use gdmatch::gd_core::gen::{generate_random, GenParams};
use gdmatch::gd_core::{GdString, Segment};
use gdmatch::sample::{dna_demo, dna_demo_pattern};

fn main() {
    let gd = dna_demo();
    let p = dna_demo_pattern();
    let r = complexity::report(&gd, &p);
    println!("sample instance:");
    println!("  sum_i sqrt(|T[i]| k_i) = {:.3}", r.sum_sqrt);
    println!(
        "  sqrt(n N)              = {:.3}  (holds: {})",
        r.bound_rhs, r.holds
    );
    println!("  predicted queries      = {:.3}", r.predicted_total);
    println!(
        "  registers              = {} bits  [{QUBIT_FORMULA}]",
        r.qubits
    );

    // Uniform products make the bound an equality.
    let uniform = GdString::new(vec![
        Segment::new(vec!["AAAAAAAAAAAA".into()]).unwrap(),
        Segment::new(vec!["AAAAAA".into(), "BBBBBB".into()]).unwrap(),
        Segment::new(vec!["AAAA".into(), "BBBB".into(), "CCCC".into()]).unwrap(),
        Segment::new(vec!["AAA".into(), "BBB".into(), "CCC".into(), "DDD".into()]).unwrap(),
    ])
    .unwrap();
    let (sum_sqrt, bound_rhs, _) = complexity::cauchy_schwarz_check(&uniform);
    println!("\nuniform-product instance (every |T[i]| k_i = 12):");
    println!("  sum = {sum_sqrt:.12}");
    println!("  rhs = {bound_rhs:.12}");
    println!("  gap = {:.2e}", (bound_rhs - sum_sqrt).abs());

    println!("\nrandom instances never violate the bound:");
    let params = GenParams {
        segments: 1..=8,
        widths: 1..=6,
        set_sizes: 1..=5,
        alphabet_size: 4,
        pattern_len: 1..=10,
    };
    for seed in 0..5 {
        let (gd, p) = generate_random(&params, seed).unwrap();
        let r = complexity::report(&gd, &p);
        println!(
            "  seed {seed}: sum={:.3} rhs={:.3} holds={} predicted={:.1}",
            r.sum_sqrt, r.bound_rhs, r.holds, r.predicted_total
        );
    }
}
