//! Tour of the core pipeline on the built-in sample: parse a GD text,
//! inspect its metrics, run all four engines and peek at the thread states
//! of the witnessing shift.
//!
//! ```bash
//! cargo run -p gdmatch --example walkthrough
//! ```

use gdmatch::cli::{run_engine, Engine};
use gdmatch::matcher::thread_trace;
use gdmatch::sample::{dna_demo, dna_demo_pattern, DNA_DEMO};

fn main() {
    let gd = dna_demo();
    let pattern = dna_demo_pattern();

    println!("GD text:\n{DNA_DEMO}");
    let m = gd.metrics();
    println!(
        "metrics: n={} segments, N={} characters, W={} columns, {} strings total",
        m.num_segments, m.size, m.width, m.cardinality
    );
    println!("pattern: {pattern} (m={})\n", pattern.len());

    for engine in Engine::ALL {
        let report = run_engine(engine, &gd, &pattern, 0, None);
        let mut line = format!("{:>14}: matched={}", engine.name(), report.matched);
        if !report.witnesses.is_empty() {
            let w: Vec<String> = report.witnesses.iter().map(|h| h.to_string()).collect();
            line.push_str(&format!(" shifts={}", w.join(",")));
        }
        if let Some(o) = &report.occurrence {
            line.push_str(&format!(" columns={}..{}", o.start_column, o.end_column));
        }
        if let Some(l) = &report.ledger {
            line.push_str(&format!(" char_queries={}", l.char_queries));
        }
        println!("{line}");
    }

    // The witnessing shift is 5: a fresh attempt starts at column 6. Watch
    // its prefix pointer, active and match bits at every segment boundary.
    println!("\nthread states for shift 5 (before segment 1, 2, ... and after the last):");
    for (i, st) in thread_trace(&gd, &pattern, 5).iter().enumerate() {
        println!(
            "  boundary {i}: j={} active={} matched={}",
            st.prefix_len, st.active, st.matched
        );
    }
}
