//! Classical matching engines.
//!
//! Three deciders live here:
//!
//! - [`match_bruteforce`]: exhaustive search over start positions and
//!   string choices. Exponential in the worst case, fine at test scale;
//!   this is the ground-truth oracle every other engine is checked against.
//! - [`match_threads`]: the shift-thread engine. One thread per pattern
//!   shift walks the segments left to right. At each segment boundary a
//!   thread knows how many pattern characters are currently alive (its
//!   prefix pointer `j`) and updates three booleans from per-segment
//!   queries: `ext` (the next `k_i` pattern characters form a member of
//!   the segment), `sm` (the remaining pattern suffix prefixes a member)
//!   and `pm` (a pattern prefix suffixes a member, starting a fresh
//!   attempt inside the segment).
//! - [`substring_scan`]: naive scan for the pattern inside a single
//!   segment string; required whenever some width reaches the pattern
//!   length, where crossing-match logic alone cannot see interior
//!   occurrences.
//!
//! # Shifts and phases
//!
//! Thread `h` (the public *shift*) is responsible for matches starting at
//! 1-based columns `c` with `(c - 1) = h (mod m)`. Internally the fold for
//! shift `h` starts with prefix pointer `j = (m - h) mod m` — the thread
//! behaves as if that many pattern characters were already consumed before
//! column 1, so its first fresh attempt begins exactly at column `h + 1`.
//! That initial value (the *phase*) is the label for which the boundary
//! invariant reads `j = (phase + k_1 + ... + k_{i-1}) mod m`; consecutive
//! phases keep `j` exactly one apart. Shift and phase are mirror labels of
//! the same m threads; reports always speak in shifts.

use std::collections::BTreeSet;
use std::fmt;

use crate::gd_core::{GdError, GdString, Occurrence, Pattern};
use crate::grover_sim::QueryLedger;
use crate::trie::{build_backward, build_forward, SegmentTrie};

/// Matching state of one thread at a segment boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreadState {
    /// Public shift identifier in `0..m`.
    pub shift: usize,
    /// Prefix pointer `j`: number of pattern characters already consumed
    /// by the attempt currently alive (0 means a fresh attempt starts at
    /// the next column).
    pub prefix_len: usize,
    /// Whether `P[..prefix_len]` really is a suffix of the text language
    /// processed so far.
    pub active: bool,
    /// Sticky bit: some earlier attempt of this thread completed.
    pub matched: bool,
}

/// The three per-segment predicate values consumed by one fold step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepPredicates {
    pub ext: bool,
    pub sm: bool,
    pub pm: bool,
}

/// Location of an in-string occurrence found by [`substring_scan`]:
/// 1-based segment, string and offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstringHit {
    pub segment: usize,
    pub string: usize,
    pub offset: usize,
}

impl fmt::Display for SubstringHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "segment {} string {} offset {}",
            self.segment, self.string, self.offset
        )
    }
}

/// Verdict of a matching engine.
///
/// `witnesses` holds the shifts whose thread detected a match (empty for
/// the brute-force engine). `occurrence` is only produced by brute force;
/// `substring` records an in-string hit from the preprocessing scan;
/// `ledger` is attached by the quantum engines.
#[derive(Debug, Clone, Default)]
pub struct MatchReport {
    pub matched: bool,
    pub witnesses: BTreeSet<usize>,
    pub occurrence: Option<Occurrence>,
    pub substring: Option<SubstringHit>,
    pub ledger: Option<QueryLedger>,
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// `ext`: do the `k_i` pattern characters after the first `j` form a member
/// of segment `i` (0-based)? Requires `j + k_i <= m`.
pub fn predicate_ext(gd: &GdString, i: usize, p: &Pattern, j: usize) -> bool {
    let seg = gd.segment(i);
    let k = seg.width();
    assert!(
        j + k <= p.len(),
        "ext probe window out of range: j={j} k={k} m={}",
        p.len()
    );
    seg.contains(&p.chars()[j..j + k])
}

/// `sm`: does the pattern suffix after the first `j` characters prefix some
/// member of segment `i`? Requires the suffix to fit: `m - j <= k_i` and
/// `j < m`.
pub fn predicate_sm(gd: &GdString, i: usize, p: &Pattern, j: usize) -> bool {
    let seg = gd.segment(i);
    let m = p.len();
    assert!(j < m, "sm needs a non-empty suffix, got j={j} m={m}");
    assert!(
        m - j <= seg.width(),
        "sm suffix does not fit: j={j} m={m} k={}",
        seg.width()
    );
    let probe = &p.chars()[j..];
    seg.strings()
        .iter()
        .enumerate()
        .any(|(s, _)| seg.chars_of(s).starts_with(probe))
}

/// `pm` in terms of the fold state: probe length is `(j + k_i) mod m`,
/// the number of pattern characters the pending attempt has consumed by the
/// end of segment `i`. Only meaningful on the boundary branch
/// (`j + k_i >= m`).
pub fn predicate_pm(gd: &GdString, i: usize, p: &Pattern, j: usize) -> bool {
    let k = gd.segment(i).width();
    debug_assert!(
        j + k >= p.len(),
        "pm is only evaluated on the boundary branch"
    );
    predicate_pm_len(gd, i, p, (j + k) % p.len())
}

/// `pm` with an explicit probe length: does the pattern prefix of length
/// `len` suffix some member of segment `i`? The empty prefix always does.
/// Requires `len <= min(k_i, m)`.
pub fn predicate_pm_len(gd: &GdString, i: usize, p: &Pattern, len: usize) -> bool {
    let seg = gd.segment(i);
    let k = seg.width();
    assert!(
        len <= k && len <= p.len(),
        "pm probe out of range: len={len} k={k} m={}",
        p.len()
    );
    if len == 0 {
        return true;
    }
    let probe = &p.chars()[..len];
    seg.strings()
        .iter()
        .enumerate()
        .any(|(s, _)| seg.chars_of(s).ends_with(probe))
}

/// All predicate values a fold step may need, computed by direct scans
/// (trie-free; this is also what the quantum simulation validates against).
/// Values outside their branch's preconditions are reported as `false`.
pub fn step_predicates(gd: &GdString, i: usize, p: &Pattern, j: usize) -> StepPredicates {
    let k = gd.segment(i).width();
    let m = p.len();
    if j + k < m {
        StepPredicates {
            ext: predicate_ext(gd, i, p, j),
            sm: false,
            pm: false,
        }
    } else {
        StepPredicates {
            ext: false,
            sm: predicate_sm(gd, i, p, j),
            pm: predicate_pm(gd, i, p, j),
        }
    }
}

// ---------------------------------------------------------------------------
// The fold
// ---------------------------------------------------------------------------

/// One register update. With `j + k < m` the segment must extend the live
/// attempt (`active &= ext`); the match bit carries over unchanged.
/// Otherwise the live attempt can complete in this segment
/// (`matched |= sm & active`) and a fresh attempt can start inside it
/// (`active = pm`). Either way the prefix pointer advances by `k mod m`.
pub fn thread_step(
    state: &ThreadState,
    pattern_len: usize,
    width: usize,
    preds: StepPredicates,
) -> ThreadState {
    let m = pattern_len;
    if state.prefix_len + width < m {
        ThreadState {
            shift: state.shift,
            prefix_len: state.prefix_len + width,
            active: state.active && preds.ext,
            matched: state.matched,
        }
    } else {
        ThreadState {
            shift: state.shift,
            prefix_len: (state.prefix_len + width) % m,
            active: preds.pm,
            matched: state.matched || (preds.sm && state.active),
        }
    }
}

fn initial_state(shift: usize, m: usize) -> ThreadState {
    let phase = (m - shift % m) % m;
    ThreadState {
        shift,
        prefix_len: phase,
        // Only an attempt needing zero prior characters is live at column 1.
        active: phase == 0,
        matched: false,
    }
}

/// Runs one thread with a caller-supplied predicate source. The closure
/// receives `(segment, j)` and must honor the branch preconditions the way
/// [`step_predicates`] does.
pub(crate) fn fold_shift<F>(gd: &GdString, p: &Pattern, shift: usize, mut preds: F) -> bool
where
    F: FnMut(usize, usize) -> StepPredicates,
{
    let m = p.len();
    let mut state = initial_state(shift, m);
    for i in 0..gd.num_segments() {
        let ps = preds(i, state.prefix_len);
        state = thread_step(&state, m, gd.segment(i).width(), ps);
    }
    state.matched
}

/// Thread states observed right before each iteration: entry `i` is the
/// state before processing segment `i+1`, and the final entry is the state
/// after the last segment. Used by the invariant instrumentation.
pub fn thread_trace(gd: &GdString, p: &Pattern, shift: usize) -> Vec<ThreadState> {
    let m = p.len();
    let mut state = initial_state(shift, m);
    let mut trace = vec![state];
    for i in 0..gd.num_segments() {
        let ps = step_predicates(gd, i, p, state.prefix_len);
        state = thread_step(&state, m, gd.segment(i).width(), ps);
        trace.push(state);
    }
    trace
}

/// Per-segment tries backing the classical engine's predicate queries.
pub struct TrieBank {
    forward: Vec<SegmentTrie>,
    backward: Vec<SegmentTrie>,
}

impl TrieBank {
    pub fn build(gd: &GdString) -> Self {
        TrieBank {
            forward: gd.segments().iter().map(build_forward).collect(),
            backward: gd.segments().iter().map(build_backward).collect(),
        }
    }

    /// Trie-backed equivalent of [`step_predicates`].
    pub fn step_predicates(
        &self,
        gd: &GdString,
        i: usize,
        p: &Pattern,
        j: usize,
    ) -> StepPredicates {
        let k = gd.segment(i).width();
        let m = p.len();
        if j + k < m {
            let probe = &p.chars()[j..j + k];
            StepPredicates {
                ext: self.forward[i]
                    .contains_exact(probe)
                    .expect("probe has segment width"),
                sm: false,
                pm: false,
            }
        } else {
            let sm_probe = &p.chars()[j..];
            let sm = self.forward[i]
                .has_prefix(sm_probe)
                .expect("suffix fits segment");
            let len = (j + k) % m;
            let pm = if len == 0 {
                true
            } else {
                let rev: Vec<char> = p.chars()[..len].iter().rev().copied().collect();
                self.backward[i]
                    .has_prefix(&rev)
                    .expect("prefix fits segment")
            };
            StepPredicates { ext: false, sm, pm }
        }
    }
}

/// Does the pattern occur starting at some column `c` with
/// `(c - 1) = shift (mod m)`? This is the boolean one thread computes.
///
/// Builds its own tries; [`match_threads`] shares one bank across all
/// shifts.
pub fn run_thread(gd: &GdString, p: &Pattern, shift: usize) -> Result<bool, GdError> {
    if shift >= p.len() {
        return Err(GdError::Argument(format!(
            "shift {shift} out of range 0..{}",
            p.len()
        )));
    }
    let bank = TrieBank::build(gd);
    Ok(fold_shift(gd, p, shift, |i, j| {
        bank.step_predicates(gd, i, p, j)
    }))
}

/// The shift-thread engine: in-string scan first, then one thread per
/// shift. `witnesses` collects every shift whose thread matched.
pub fn match_threads(gd: &GdString, p: &Pattern) -> MatchReport {
    let substring = substring_scan(gd, p);
    let bank = TrieBank::build(gd);
    let witnesses: BTreeSet<usize> = (0..p.len())
        .filter(|&h| fold_shift(gd, p, h, |i, j| bank.step_predicates(gd, i, p, j)))
        .collect();
    MatchReport {
        matched: !witnesses.is_empty() || substring.is_some(),
        witnesses,
        occurrence: None,
        substring,
        ledger: None,
    }
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

/// Exhaustive occurrence search: every start position, every string choice,
/// depth-first. Returns the smallest occurrence under the order
/// (start column, witness string indices), or `None`.
pub fn match_bruteforce(gd: &GdString, p: &Pattern) -> Option<Occurrence> {
    let m = p.len();
    if m > gd.width() {
        return None;
    }
    let pc = p.chars();
    for i in 0..gd.num_segments() {
        let seg = gd.segment(i);
        let k = seg.width();
        for a in 0..k {
            let start_column = gd.columns_before(i) + a + 1;
            if start_column + m - 1 > gd.width() {
                break;
            }
            for s in 0..seg.len() {
                let chars = seg.chars_of(s);
                if m <= k - a {
                    // whole pattern inside this one string
                    if &chars[a..a + m] == pc {
                        return Some(Occurrence {
                            start_column,
                            end_column: start_column + m - 1,
                            witness: vec![(i + 1, s + 1)],
                        });
                    }
                } else if chars[a..] == pc[..k - a] {
                    let mut witness = vec![(i + 1, s + 1)];
                    if extend_match(gd, pc, i + 1, k - a, &mut witness) {
                        return Some(Occurrence {
                            start_column,
                            end_column: start_column + m - 1,
                            witness,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Depth-first continuation over later segments; string indices ascend, so
/// the first completion is the lexicographically smallest witness.
fn extend_match(
    gd: &GdString,
    pc: &[char],
    seg_idx: usize,
    consumed: usize,
    witness: &mut Vec<(usize, usize)>,
) -> bool {
    if seg_idx == gd.num_segments() {
        return false; // ran out of text with pattern characters left
    }
    let seg = gd.segment(seg_idx);
    let k = seg.width();
    let remaining = pc.len() - consumed;
    for s in 0..seg.len() {
        let chars = seg.chars_of(s);
        if remaining <= k {
            if chars[..remaining] == pc[consumed..] {
                witness.push((seg_idx + 1, s + 1));
                return true;
            }
        } else if chars == &pc[consumed..consumed + k] {
            witness.push((seg_idx + 1, s + 1));
            if extend_match(gd, pc, seg_idx + 1, consumed + k, witness) {
                return true;
            }
            witness.pop();
        }
    }
    false
}

/// First in-string occurrence of the pattern in scan order
/// (segment, string, offset), reported 1-based. Naive O(N * m).
pub fn substring_scan(gd: &GdString, p: &Pattern) -> Option<SubstringHit> {
    let m = p.len();
    let pc = p.chars();
    for i in 0..gd.num_segments() {
        let seg = gd.segment(i);
        if seg.width() < m {
            continue;
        }
        for s in 0..seg.len() {
            let chars = seg.chars_of(s);
            for off in 0..=seg.width() - m {
                if &chars[off..off + m] == pc {
                    return Some(SubstringHit {
                        segment: i + 1,
                        string: s + 1,
                        offset: off + 1,
                    });
                }
            }
        }
    }
    None
}
