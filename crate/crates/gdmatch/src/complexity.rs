//! Analytic cost predictions and bound checks for the query ledgers.
//!
//! The quantum engine's modeled character-query count should track
//! `sqrt(m) * sum_i sqrt(|T[i]| * k_i)` up to a stable constant, and that
//! sum is itself bounded by `sqrt(n * N)` (Cauchy-Schwarz with unit
//! weights, tight exactly when all products `|T[i]| * k_i` agree). This
//! module computes both sides so reports and benchmarks can assert them.

use serde::Serialize;

use crate::gd_core::{GdString, Pattern};

/// Tolerance for the Cauchy-Schwarz comparison.
pub const BOUND_EPS: f64 = 1e-9;

/// Summary of the analytic quantities for one instance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexityReport {
    /// `sum_i sqrt(|T[i]| * k_i)`.
    pub sum_sqrt: f64,
    /// `sqrt(n * N)`.
    pub bound_rhs: f64,
    /// `sqrt(m) * sum_sqrt`, the per-run query prediction.
    pub predicted_total: f64,
    /// Whether `sum_sqrt <= bound_rhs` within [`BOUND_EPS`].
    pub holds: bool,
    /// Working-register estimate, see [`qubit_estimate`].
    pub qubits: u64,
}

/// `sum_i sqrt(|T[i]| * k_i)` compared against `sqrt(n * N)`.
/// Returns `(sum_sqrt, bound_rhs, holds)`.
pub fn cauchy_schwarz_check(gd: &GdString) -> (f64, f64, bool) {
    let sum_sqrt: f64 = gd
        .segments()
        .iter()
        .map(|s| ((s.len() * s.width()) as f64).sqrt())
        .sum();
    let metrics = gd.metrics();
    let bound_rhs = ((metrics.num_segments * metrics.size) as f64).sqrt();
    (sum_sqrt, bound_rhs, sum_sqrt <= bound_rhs + BOUND_EPS)
}

/// The per-run query prediction `sqrt(m) * sum_i sqrt(|T[i]| * k_i)`.
pub fn predicted_queries(gd: &GdString, p: &Pattern) -> f64 {
    let (sum_sqrt, _, _) = cauchy_schwarz_check(gd);
    (p.len() as f64).sqrt() * sum_sqrt
}

fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 1);
    64 - (x - 1).leading_zeros() as u64
}

/// Working-register estimate:
/// `ceil(log2 m)` for the shift register, the same for the prefix pointer,
/// plus `n` per-iteration register groups of 5 flag bits (active, match,
/// extension, suffix match, prefix match) and a width register of
/// `ceil(log2(max_k + 1))` bits.
///
/// This is one concrete realization of the asymptotic
/// `O(log m + n log N)` register budget; reports print the formula next to
/// the number.
pub fn qubit_estimate(gd: &GdString, p: &Pattern) -> u64 {
    let m = p.len() as u64;
    let max_k = gd.segments().iter().map(|s| s.width()).max().unwrap_or(1) as u64;
    let n = gd.num_segments() as u64;
    ceil_log2(m) + ceil_log2(m) + n * (5 + ceil_log2(max_k + 1))
}

/// Human-readable form of the estimate in [`qubit_estimate`].
pub const QUBIT_FORMULA: &str = "2*ceil(log2(m)) + n*(5 + ceil(log2(max_k + 1)))";

/// All analytic quantities for one instance/pattern pair.
pub fn report(gd: &GdString, p: &Pattern) -> ComplexityReport {
    let (sum_sqrt, bound_rhs, holds) = cauchy_schwarz_check(gd);
    ComplexityReport {
        sum_sqrt,
        bound_rhs,
        predicted_total: predicted_queries(gd, p),
        holds,
        qubits: qubit_estimate(gd, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gd_core::{GdString, Pattern, Segment};
    use crate::sample::{dna_demo, dna_demo_pattern};

    #[test]
    fn demo_quantities() {
        let gd = dna_demo();
        let (sum_sqrt, bound_rhs, holds) = cauchy_schwarz_check(&gd);
        let expect: f64 = [12.0f64, 8.0, 6.0, 10.0, 6.0]
            .iter()
            .map(|x| x.sqrt())
            .sum();
        assert!((sum_sqrt - expect).abs() < 1e-12);
        assert!((sum_sqrt - 14.354).abs() < 1e-3);
        assert!((bound_rhs - 210f64.sqrt()).abs() < 1e-12);
        assert!(holds);
        let predicted = predicted_queries(&gd, &dna_demo_pattern());
        assert!((predicted - 37.98).abs() < 1e-2);
    }

    #[test]
    fn single_segment_is_tight() {
        let gd = GdString::parse("ACG,TAA").unwrap();
        let (sum_sqrt, bound_rhs, holds) = cauchy_schwarz_check(&gd);
        assert!((sum_sqrt - bound_rhs).abs() < BOUND_EPS);
        assert!(holds);
    }

    #[test]
    fn uniform_products_are_tight() {
        // widths and set sizes arranged so every |T[i]| * k_i equals 12
        let segments = vec![
            Segment::new(vec!["ABABABABABAB".into()]).unwrap(),
            Segment::new(vec!["AAAAAA".into(), "BBBBBB".into()]).unwrap(),
            Segment::new(vec!["AAAA".into(), "BBBB".into(), "ABAB".into()]).unwrap(),
            Segment::new(vec!["AAA".into(), "BBB".into(), "ABA".into(), "BAB".into()]).unwrap(),
        ];
        let gd = GdString::new(segments).unwrap();
        let (sum_sqrt, bound_rhs, holds) = cauchy_schwarz_check(&gd);
        assert!(
            (sum_sqrt - bound_rhs).abs() < BOUND_EPS,
            "{sum_sqrt} vs {bound_rhs}"
        );
        assert!(holds);
    }

    #[test]
    fn prediction_unit_case_and_homogeneity() {
        let unit = GdString::parse("A").unwrap();
        let p1 = Pattern::new("A").unwrap();
        assert!((predicted_queries(&unit, &p1) - 1.0).abs() < 1e-12);

        // doubling every set size scales the prediction by sqrt(2)
        let gd = dna_demo();
        let doubled: Vec<Segment> = gd
            .segments()
            .iter()
            .map(|s| {
                let mut strings = s.strings().to_vec();
                let extra: Vec<String> = strings
                    .iter()
                    .map(|w| {
                        // fresh distinct strings over an enlarged alphabet
                        w.chars().map(|c| c.to_ascii_lowercase()).collect()
                    })
                    .collect();
                strings.extend(extra);
                Segment::new(strings).unwrap()
            })
            .collect();
        let gd2 = GdString::new(doubled).unwrap();
        let p = dna_demo_pattern();
        let ratio = predicted_queries(&gd2, &p) / predicted_queries(&gd, &p);
        assert!((ratio - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn qubit_estimates() {
        let gd = dna_demo();
        assert_eq!(qubit_estimate(&gd, &dna_demo_pattern()), 46);
        let unit = GdString::parse("A").unwrap();
        assert_eq!(qubit_estimate(&unit, &Pattern::new("A").unwrap()), 6);
        // doubling n doubles the linear term exactly
        let twice = GdString::parse("A\nA").unwrap();
        let p = Pattern::new("A").unwrap();
        let base = qubit_estimate(&unit, &p);
        assert_eq!(qubit_estimate(&twice, &p), 2 * base);
    }

    #[test]
    fn report_carries_all_fields() {
        let gd = dna_demo();
        let r = report(&gd, &dna_demo_pattern());
        assert!(r.holds);
        assert!(r.predicted_total > r.sum_sqrt);
        assert_eq!(r.qubits, 46);
    }
}
