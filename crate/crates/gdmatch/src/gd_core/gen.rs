//! Random instance generation for tests, fuzzing and benchmarks.
//!
//! Everything here is deterministic for a fixed seed: all randomness flows
//! through an explicit ChaCha generator, never through thread-local state.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GdError, GdString, Pattern, Segment};

/// Parameter ranges for [`generate_random`]. All ranges are inclusive.
#[derive(Debug, Clone)]
pub struct GenParams {
    pub segments: RangeInclusive<usize>,
    pub widths: RangeInclusive<usize>,
    pub set_sizes: RangeInclusive<usize>,
    pub alphabet_size: usize,
    pub pattern_len: RangeInclusive<usize>,
}

impl GenParams {
    fn validate(&self) -> Result<(), GdError> {
        let bad = |what: &str| Err(GdError::Argument(format!("invalid range for {what}")));
        if self.segments.is_empty() || *self.segments.start() == 0 {
            return bad("segments");
        }
        if self.widths.is_empty() || *self.widths.start() == 0 {
            return bad("widths");
        }
        if self.set_sizes.is_empty() || *self.set_sizes.start() == 0 {
            return bad("set sizes");
        }
        if self.pattern_len.is_empty() || *self.pattern_len.start() == 0 {
            return bad("pattern length");
        }
        if self.alphabet_size == 0 || self.alphabet_size > 26 {
            return Err(GdError::Argument("alphabet size must be in 1..=26".into()));
        }
        Ok(())
    }
}

/// The first `size` uppercase letters, the alphabet used by generated
/// instances.
pub fn alphabet(size: usize) -> Vec<char> {
    ('A'..='Z').take(size).collect()
}

/// Deterministic random instance: a GD string plus an independent random
/// pattern over the same alphabet.
///
/// Requested set sizes are clamped to the number of distinct words of the
/// drawn width, so generation always terminates.
pub fn generate_random(params: &GenParams, seed: u64) -> Result<(GdString, Pattern), GdError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gd = random_gd(params, &mut rng)?;
    let sigma = alphabet(params.alphabet_size);
    let m = rng.gen_range(params.pattern_len.clone());
    let p: String = (0..m)
        .map(|_| sigma[rng.gen_range(0..sigma.len())])
        .collect();
    Ok((gd, Pattern::new(p)?))
}

/// As [`generate_random`] but with a caller-owned generator, so harnesses
/// can derive several artifacts from one seed.
pub fn random_gd(params: &GenParams, rng: &mut ChaCha8Rng) -> Result<GdString, GdError> {
    params.validate()?;
    let sigma = alphabet(params.alphabet_size);
    let n = rng.gen_range(params.segments.clone());
    let mut segments = Vec::with_capacity(n);
    for _ in 0..n {
        let width = rng.gen_range(params.widths.clone());
        let requested = rng.gen_range(params.set_sizes.clone());
        segments.push(random_segment(&sigma, width, requested, rng)?);
    }
    GdString::new(segments)
}

fn random_segment(
    sigma: &[char],
    width: usize,
    requested: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Segment, GdError> {
    let capacity = word_capacity(sigma.len(), width);
    let count = requested.min(capacity).max(1);
    let strings = if capacity <= 4096 {
        // Small word spaces: enumerate, shuffle, take. Exact and fast even
        // when the request equals the capacity.
        let mut all = enumerate_words(sigma, width);
        all.shuffle(rng);
        all.truncate(count);
        all
    } else {
        let mut set = BTreeSet::new();
        let mut ordered = Vec::with_capacity(count);
        while ordered.len() < count {
            let w: String = (0..width)
                .map(|_| sigma[rng.gen_range(0..sigma.len())])
                .collect();
            if set.insert(w.clone()) {
                ordered.push(w);
            }
        }
        ordered
    };
    Segment::new(strings)
}

/// Number of distinct words of the given width, saturating at usize::MAX.
fn word_capacity(sigma: usize, width: usize) -> usize {
    let mut cap = 1usize;
    for _ in 0..width {
        cap = cap.saturating_mul(sigma);
        if cap > 1 << 40 {
            return usize::MAX;
        }
    }
    cap
}

fn enumerate_words(sigma: &[char], width: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..width {
        let mut next = Vec::with_capacity(words.len() * sigma.len());
        for w in &words {
            for &c in sigma {
                let mut e = w.clone();
                e.push(c);
                next.push(e);
            }
        }
        words = next;
    }
    words
}

/// A pattern guaranteed to occur in `gd`: a random window of a random
/// member of the language. Window length is drawn from `len`, clamped to
/// `1..=W`.
pub fn planted_pattern(gd: &GdString, len: RangeInclusive<usize>, rng: &mut ChaCha8Rng) -> Pattern {
    let mut member: Vec<char> = Vec::with_capacity(gd.width());
    for seg in gd.segments() {
        let s = rng.gen_range(0..seg.len());
        member.extend_from_slice(seg.chars_of(s));
    }
    let w = member.len();
    let lo = (*len.start()).clamp(1, w);
    let hi = (*len.end()).clamp(lo, w);
    let m = rng.gen_range(lo..=hi);
    let start = rng.gen_range(0..=w - m);
    Pattern::new(member[start..start + m].iter().collect::<String>()).unwrap()
}

/// A pattern planted strictly inside a single segment string, exercising
/// the in-string preprocessing path. Returns `None` when every segment has
/// width < 2 and `max_len` < 1 cases cannot arise; in practice a window of
/// length up to `max_len` (clamped to the widest segment) is always found.
pub fn planted_substring_pattern(
    gd: &GdString,
    max_len: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Pattern> {
    let widest = gd.segments().iter().map(|s| s.width()).max()?;
    let m = rng.gen_range(1..=max_len.clamp(1, widest));
    let candidates: Vec<usize> = (0..gd.num_segments())
        .filter(|&i| gd.segment(i).width() >= m)
        .collect();
    let &i = candidates.get(rng.gen_range(0..candidates.len()))?;
    let seg = gd.segment(i);
    let s = rng.gen_range(0..seg.len());
    let off = rng.gen_range(0..=seg.width() - m);
    let window: String = seg.chars_of(s)[off..off + m].iter().collect();
    Some(Pattern::new(window).unwrap())
}
