//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them).
//!
//! The criteria pin the demo-instance reproduction, cross-engine
//! equivalence under fuzzing, the thread-boundary invariant, the Grover
//! analytics, sampled-mode robustness, the query-scaling law, the
//! Cauchy-Schwarz bound, the in-string preprocessing equivalence and the
//! shift coverage argument.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gdmatch::cli::{run_engine, Engine};
use gdmatch::complexity;
use gdmatch::gd_core::gen::{
    generate_random, planted_pattern, planted_substring_pattern, random_gd, GenParams,
};
use gdmatch::gd_core::{GdString, Pattern, Segment};
use gdmatch::grover_sim::{closed_form_success, grover_exact, QuantumEngine, SimMode};
use gdmatch::matcher::{match_bruteforce, match_threads, substring_scan, thread_trace};
use gdmatch::sample::{dna_demo, dna_demo_pattern};

/// Fuzz-corpus parameters shared by several criteria: alphabet 2-4,
/// up to 6 segments of width up to 5 with up to 4 strings, patterns up
/// to length 12.
fn fuzz_params(seed: u64) -> GenParams {
    GenParams {
        segments: 1..=6,
        widths: 1..=5,
        set_sizes: 1..=4,
        alphabet_size: 2 + (seed % 3) as usize,
        pattern_len: 1..=12,
    }
}

/// One fuzz instance; every fourth is planted inside a segment string
/// (forcing widths >= pattern length), every other fourth is a window of a
/// language member, and one family uses short patterns against wide
/// segments so the long-segment path stays hot.
fn fuzz_instance(seed: u64) -> (GdString, Pattern) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    match seed % 4 {
        0 => generate_random(&fuzz_params(seed), seed).unwrap(),
        1 => {
            let (gd, _) = generate_random(&fuzz_params(seed), seed).unwrap();
            let p = planted_pattern(&gd, 1..=12, &mut rng);
            (gd, p)
        }
        2 => {
            let (gd, fallback) = generate_random(&fuzz_params(seed), seed).unwrap();
            let p = planted_substring_pattern(&gd, 5, &mut rng).unwrap_or(fallback);
            (gd, p)
        }
        _ => {
            let params = GenParams {
                segments: 1..=5,
                widths: 3..=5,
                set_sizes: 1..=4,
                alphabet_size: 2,
                pattern_len: 1..=3,
            };
            generate_random(&params, seed).unwrap()
        }
    }
}

#[test]
fn criterion_1_demo_reproduction() {
    let started = Instant::now();
    let gd = dna_demo();
    let p = dna_demo_pattern();

    let brute = match_bruteforce(&gd, &p).expect("demo pattern occurs");
    assert_eq!(brute.start_column, 6);
    assert_eq!(brute.end_column, 12);
    assert!(brute.verify(&gd, &p));

    let threads = match_threads(&gd, &p);
    assert!(threads.matched);
    assert!(threads.witnesses.contains(&5));

    for engine in Engine::ALL {
        let report = run_engine(engine, &gd, &p, 0, None);
        assert!(report.matched, "engine {} must match", engine.name());
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 (demo reproduction): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_oracle_equivalence_fuzz() {
    let started = Instant::now();
    let mut planted_in_string = 0;
    let mut with_long_segments = 0;
    for seed in 0..1000u64 {
        let (gd, p) = fuzz_instance(seed);
        let expected = match_bruteforce(&gd, &p).is_some();
        let threads = match_threads(&gd, &p);
        assert_eq!(
            threads.matched,
            expected,
            "threads disagree on seed {seed}: text {:?} pattern {}",
            gd.to_text(),
            p
        );
        let quantum = QuantumEngine::ideal(seed).match_quantum(&gd, &p);
        assert_eq!(
            quantum.matched,
            expected,
            "quantum disagrees on seed {seed}: text {:?} pattern {}",
            gd.to_text(),
            p
        );
        if substring_scan(&gd, &p).is_some() {
            planted_in_string += 1;
        }
        if gd.segments().iter().any(|s| s.width() >= p.len()) {
            with_long_segments += 1;
        }
    }
    assert!(
        planted_in_string >= 100,
        "corpus has only {planted_in_string} in-string hits"
    );
    assert!(
        with_long_segments >= 250,
        "corpus has only {with_long_segments} wide instances"
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 2 (oracle equivalence, 1000 instances, {planted_in_string} in-string, \
         {with_long_segments} wide): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_3_boundary_invariant() {
    let mut checked = 0u64;
    for seed in 0..100u64 {
        let (gd, p) = fuzz_instance(seed * 7 + 3);
        let m = p.len();
        // traces indexed by the fold label: the thread whose initial
        // prefix pointer is `phase` carries public shift (m - phase) % m
        let traces: Vec<Vec<_>> = (0..m)
            .map(|phase| thread_trace(&gd, &p, (m - phase) % m))
            .collect();
        for (phase, trace) in traces.iter().enumerate() {
            let mut consumed = 0usize;
            for (i, state) in trace.iter().enumerate() {
                assert_eq!(
                    state.prefix_len,
                    (phase + consumed) % m,
                    "seed {seed} phase {phase} boundary {i}"
                );
                if i < gd.num_segments() {
                    consumed += gd.segment(i).width();
                }
                checked += 1;
            }
        }
        // unit shift between consecutive labels, at every boundary
        for phase in 0..m {
            let next = (phase + 1) % m;
            for (i, (a, b)) in traces[phase].iter().zip(&traces[next]).enumerate() {
                assert_eq!(
                    b.prefix_len,
                    (a.prefix_len + 1) % m,
                    "seed {seed} phase {phase} boundary {i}"
                );
            }
        }
    }
    println!("criterion 3 (boundary invariant, {checked} states checked): PASS");
}

#[test]
fn criterion_4_grover_analytics() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa5a5);
    for case in 0..500u64 {
        let domain = rng.gen_range(1..=256u64);
        let marked = rng.gen_range(0..=domain);
        // mark a random subset of the requested size
        let mut indices: Vec<u64> = (0..domain).collect();
        for i in (1..indices.len()).rev() {
            let j = rng.gen_range(0..=i);
            indices.swap(i, j);
        }
        let marked_set: BTreeSet<u64> = indices.into_iter().take(marked as usize).collect();
        let run = grover_exact(|i| marked_set.contains(&i), domain, &mut rng).unwrap();
        assert_eq!(run.marked_count, marked);
        let closed = closed_form_success(run.domain_size, run.marked_count, run.iterations);
        assert!(
            (run.success_probability - closed).abs() < 1e-12,
            "case {case}: K={domain} M={marked}: {} vs {closed}",
            run.success_probability
        );
        if marked >= 1 {
            assert!(
                run.success_probability >= 2.0 / 3.0 - 1e-12,
                "case {case}: K={domain} M={marked}: success {}",
                run.success_probability
            );
        } else {
            assert_eq!(
                run.outcome, None,
                "case {case}: unmarked run produced a hit"
            );
            assert_eq!(run.success_probability, 0.0);
        }
        if let Some(idx) = run.outcome {
            assert!(marked_set.contains(&idx), "case {case}: unverified outcome");
        }
    }
    println!("criterion 4 (grover analytics, 500 cases): PASS");
}

#[test]
fn criterion_5_sampled_robustness() {
    let matchable_params = GenParams {
        segments: 1..=4,
        widths: 1..=4,
        set_sizes: 1..=3,
        alphabet_size: 2,
        pattern_len: 1..=8,
    };
    let mut hits = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ed);
        let gd = random_gd(&matchable_params, &mut rng).unwrap();
        let p = if seed % 3 == 0 {
            planted_substring_pattern(&gd, 4, &mut rng)
                .unwrap_or_else(|| planted_pattern(&gd, 1..=8, &mut rng))
        } else {
            planted_pattern(&gd, 1..=8, &mut rng)
        };
        assert!(
            match_bruteforce(&gd, &p).is_some(),
            "planting failed on seed {seed}"
        );
        let mut engine = QuantumEngine::new(
            SimMode::Sampled {
                boost_repetitions: None,
            },
            seed,
        );
        if engine.match_quantum(&gd, &p).matched {
            hits += 1;
        }
    }
    assert!(hits >= 180, "only {hits}/200 matchable instances detected");

    let mut false_positives = 0;
    let mut produced = 0;
    let mut seed = 0u64;
    while produced < 200 {
        seed += 1;
        let (gd, p) = generate_random(&fuzz_params(seed), seed ^ 0xbeef).unwrap();
        if match_bruteforce(&gd, &p).is_some() {
            continue;
        }
        produced += 1;
        let mut engine = QuantumEngine::new(
            SimMode::Sampled {
                boost_repetitions: None,
            },
            seed,
        );
        if engine.match_quantum(&gd, &p).matched {
            false_positives += 1;
        }
    }
    assert_eq!(
        false_positives, 0,
        "verification gate leaked false positives"
    );
    println!(
        "criterion 5 (sampled robustness: {hits}/200 matchable hits, 0/200 false positives): PASS"
    );
}

#[test]
fn criterion_6_scaling_law() {
    let started = Instant::now();
    // base point of the ladder; each axis doubles independently: 1x 2x 4x 8x
    let (base_m, base_n, base_set, base_k) = (8usize, 8usize, 4usize, 4usize);
    let mut worst_axis = ("", 1.0f64);
    for axis in ["m", "n", "set", "k"] {
        let mut ratios = Vec::new();
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
                pattern_len: 1..=1, // replaced below
            };
            let mut rng = ChaCha8Rng::seed_from_u64(0xc0de + factor as u64);
            let gd = random_gd(&params, &mut rng).unwrap();
            // foreign character: deterministic non-match, so the outer
            // search always pays its full schedule
            let p = Pattern::new("Z".repeat(m)).unwrap();
            let mut engine = QuantumEngine::ideal(factor as u64);
            let report = engine.match_quantum(&gd, &p);
            assert!(!report.matched);
            let charged = report.ledger.unwrap().char_queries as f64;
            let predicted = complexity::predicted_queries(&gd, &p);
            ratios.push(charged / predicted);
        }
        let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().cloned().fold(0.0f64, f64::max);
        let drift = hi / lo;
        assert!(
            drift <= 2.0,
            "axis {axis}: ratios {ratios:?} drift {drift:.3} exceeds 2x"
        );
        if drift > worst_axis.1 {
            worst_axis = (axis, drift);
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}");
    println!(
        "criterion 6 (scaling law, worst axis {} drift {:.3}): PASS in {elapsed:?}",
        worst_axis.0, worst_axis.1
    );
}

#[test]
fn criterion_7_sum_bound() {
    let mut checked = 0u64;
    // every instance family the other criteria draw from
    for seed in 0..1000u64 {
        let (gd, _) = fuzz_instance(seed);
        let (_, _, holds) = complexity::cauchy_schwarz_check(&gd);
        assert!(holds, "bound failed on fuzz seed {seed}");
        checked += 1;
    }
    for seed in 0..400u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ed);
        let gd = random_gd(
            &GenParams {
                segments: 1..=4,
                widths: 1..=4,
                set_sizes: 1..=3,
                alphabet_size: 2,
                pattern_len: 1..=8,
            },
            &mut rng,
        )
        .unwrap();
        let (_, _, holds) = complexity::cauchy_schwarz_check(&gd);
        assert!(holds, "bound failed on robustness seed {seed}");
        checked += 1;
    }
    // uniform products: the inequality is tight
    for segs in [
        vec![(1usize, 12usize), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)],
        vec![(2, 2), (4, 1), (1, 4)],
    ] {
        let gd = uniform_product_instance(&segs);
        let (sum_sqrt, bound_rhs, holds) = complexity::cauchy_schwarz_check(&gd);
        assert!(holds);
        assert!(
            (sum_sqrt - bound_rhs).abs() <= 1e-9,
            "uniform instance not tight: {sum_sqrt} vs {bound_rhs}"
        );
        checked += 1;
    }
    assert!(checked >= 1200);
    println!("criterion 7 (sum bound on {checked} instances, tight on uniform): PASS");
}

/// Builds an instance whose per-segment products |T[i]| * k_i all agree,
/// the equality case of the bound.
fn uniform_product_instance(shape: &[(usize, usize)]) -> GdString {
    let sigma: Vec<char> = ('A'..='Z').collect();
    let segments: Vec<Segment> = shape
        .iter()
        .map(|&(count, width)| {
            let strings: Vec<String> = (0..count)
                .map(|i| sigma[i].to_string().repeat(width))
                .collect();
            Segment::new(strings).unwrap()
        })
        .collect();
    GdString::new(segments).unwrap()
}

#[test]
fn criterion_8_preprocessing_equivalence() {
    let mut in_string_hits = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0551);
        let params = GenParams {
            segments: 1..=5,
            widths: 1..=6,
            set_sizes: 1..=4,
            alphabet_size: 2 + (seed % 3) as usize,
            pattern_len: 1..=6,
        };
        let (gd, mut p) = generate_random(&params, seed).unwrap();
        if seed % 2 == 0 {
            if let Some(planted) = planted_substring_pattern(&gd, 6, &mut rng) {
                p = planted;
            }
        }
        let expected = substring_scan(&gd, &p).is_some();
        let got = QuantumEngine::ideal(seed).substring_quantum(&gd, &p);
        assert_eq!(
            got,
            expected,
            "seed {seed}: text {:?} pattern {}",
            gd.to_text(),
            p
        );
        if expected {
            in_string_hits += 1;
        }
    }
    assert!(in_string_hits >= 150, "only {in_string_hits} planted hits");
    println!("criterion 8 (preprocessing equivalence, {in_string_hits}/500 with hits): PASS");
}

#[test]
fn criterion_9_column_coverage() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc01);
    for case in 0..100u64 {
        let m = rng.gen_range(1..=16usize);
        let w = rng.gen_range(1..=200usize);
        let mut covered = vec![false; w + 1];
        for shift in 0..m {
            let mut c = shift + 1;
            while c <= w {
                covered[c] = true;
                c += m;
            }
        }
        assert!(
            (1..=w).all(|c| covered[c]),
            "case {case}: m={m} W={w} leaves columns uncovered"
        );
    }
    println!("criterion 9 (column coverage, 100 (m, W) pairs): PASS");
}
