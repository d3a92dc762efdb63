//! Small built-in sample instances shared by examples, docs and tests.

use crate::gd_core::{GdString, Pattern};

/// A five-segment DNA-style GD string used as the running example across
/// the crate:
///
/// ```text
/// {ACG,TAA,CGT,GTA} {GATC,CGGT} {AC,GT,CA} {TAAGT,ATGCA} {ACG,TTA}
/// ```
///
/// Its metrics are n=5 segments, size N=42, width W=17, cardinality 13.
/// The pattern [`DNA_DEMO_PATTERN`] occurs exactly once, spelled
/// `CGGT[3..4] GT TAAGT[1..3]`, i.e. columns 6 through 12.
pub const DNA_DEMO: &str = "ACG,TAA,CGT,GTA\nGATC,CGGT\nAC,GT,CA\nTAAGT,ATGCA\nACG,TTA\n";

/// Pattern with a single crossing occurrence in [`DNA_DEMO`].
pub const DNA_DEMO_PATTERN: &str = "GTGTTAA";

pub fn dna_demo() -> GdString {
    GdString::parse(DNA_DEMO).expect("built-in sample parses")
}

pub fn dna_demo_pattern() -> Pattern {
    Pattern::new(DNA_DEMO_PATTERN).expect("built-in pattern is valid")
}
