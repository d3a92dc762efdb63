//! Core data model for generalized degenerate (GD) strings.
//!
//! A GD string is an ordered sequence of *segments*; each segment is a
//! non-empty collection of distinct strings that all share one width. The
//! *language* of a GD string is every concatenation obtained by picking one
//! string per segment. Patterns are plain strings matched against that
//! language.
//!
//! Columns are global 1-based character positions: segment `i` (1-based)
//! occupies columns `1 + sum(k_1..k_{i-1}) ..= sum(k_1..k_i)` where `k_i` is
//! the segment width.
//!
//! The on-disk text format is line oriented: lines starting with `#` are
//! comments, every other line is one segment with its strings separated by
//! commas. See [`GdString::parse`].

use std::collections::BTreeSet;
use std::fmt;

pub mod gen;

/// Errors shared by the core types and the engines built on top of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GdError {
    /// The input text violates the GD file format. `line` is 1-based.
    Format { line: usize, msg: String },
    /// The input text contains no segment lines at all.
    Empty,
    /// An index (segment, offset, column, ...) is out of range.
    Index(String),
    /// An argument violates a documented precondition.
    Argument(String),
    /// An I/O style failure surfaced through the CLI layer.
    Io(String),
}

impl fmt::Display for GdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GdError::Format { line, msg } => write!(f, "format error at line {line}: {msg}"),
            GdError::Empty => write!(f, "input contains no segments"),
            GdError::Index(msg) => write!(f, "index error: {msg}"),
            GdError::Argument(msg) => write!(f, "argument error: {msg}"),
            GdError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for GdError {}

/// One segment `T[i]`: a set of distinct strings, all of width `k_i`.
///
/// Strings keep their construction order so that a witness can refer to
/// "the s-th string of segment i" stably.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    width: usize,
    strings: Vec<String>,
    chars: Vec<Vec<char>>,
}

impl Segment {
    /// Builds a segment, enforcing the invariants: at least one string,
    /// equal widths, width >= 1, no duplicates, no whitespace characters.
    pub fn new(strings: Vec<String>) -> Result<Self, GdError> {
        Self::new_at_line(strings, 0)
    }

    fn new_at_line(strings: Vec<String>, line: usize) -> Result<Self, GdError> {
        let err = |msg: String| GdError::Format { line, msg };
        if strings.is_empty() {
            return Err(err("segment has no strings".into()));
        }
        let chars: Vec<Vec<char>> = strings.iter().map(|s| s.chars().collect()).collect();
        let width = chars[0].len();
        if width == 0 {
            return Err(err("empty string in segment".into()));
        }
        for (s, cs) in strings.iter().zip(&chars) {
            if cs.is_empty() {
                return Err(err("empty string in segment".into()));
            }
            if cs.len() != width {
                return Err(err(format!(
                    "unequal string lengths in segment: {:?} has length {}, expected {}",
                    s,
                    cs.len(),
                    width
                )));
            }
            if cs.iter().any(|c| c.is_whitespace()) {
                return Err(err(format!("whitespace inside string {s:?}")));
            }
        }
        let mut seen = BTreeSet::new();
        for s in &strings {
            if !seen.insert(s.as_str()) {
                return Err(err(format!("duplicate string {s:?} in segment")));
            }
        }
        Ok(Segment {
            width,
            strings,
            chars,
        })
    }

    /// Segment width `k_i`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of strings `|T[i]|`.
    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        false // never empty by construction
    }

    pub fn strings(&self) -> &[String] {
        &self.strings
    }

    /// The s-th string (0-based) as a character slice.
    pub fn chars_of(&self, s: usize) -> &[char] {
        &self.chars[s]
    }

    /// Character `T[i][s][c]` with 0-based `s` and `c`.
    pub fn char_at(&self, s: usize, c: usize) -> char {
        self.chars[s][c]
    }

    /// Exact membership by linear scan. The trie module offers the same
    /// query in O(width).
    pub fn contains(&self, probe: &[char]) -> bool {
        probe.len() == self.width && self.chars.iter().any(|cs| cs == probe)
    }
}

/// Derived size metrics of a GD string.
///
/// `num_segments` is `n`, `size` is `N = sum |T[i]| * k_i`, `width` is
/// `W = sum k_i`, and `cardinality` is `sum |T[i]|`. `n` always denotes the
/// segment count in this crate; the total number of strings is kept as the
/// separate `cardinality` metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metrics {
    pub num_segments: usize,
    pub size: usize,
    pub width: usize,
    pub cardinality: usize,
}

/// A generalized degenerate string: a non-empty ordered sequence of
/// [`Segment`]s plus the alphabet inferred from their characters.
///
/// Immutable after construction; cheap to share across readers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdString {
    segments: Vec<Segment>,
    alphabet: BTreeSet<char>,
    prefix_widths: Vec<usize>,
}

impl GdString {
    pub fn new(segments: Vec<Segment>) -> Result<Self, GdError> {
        if segments.is_empty() {
            return Err(GdError::Empty);
        }
        let mut alphabet = BTreeSet::new();
        for seg in &segments {
            for cs in &seg.chars {
                alphabet.extend(cs.iter().copied());
            }
        }
        let mut prefix_widths = Vec::with_capacity(segments.len() + 1);
        let mut acc = 0usize;
        prefix_widths.push(0);
        for seg in &segments {
            acc += seg.width();
            prefix_widths.push(acc);
        }
        Ok(GdString {
            segments,
            alphabet,
            prefix_widths,
        })
    }

    /// Parses the GD text format.
    ///
    /// Rules: UTF-8 text; a line whose first character is `#` is ignored;
    /// every other line is one segment with strings separated by `,`;
    /// segment order is line order. Empty lines, empty strings, duplicate
    /// strings within a line and unequal lengths within a line are format
    /// errors carrying the offending 1-based line number. A file with no
    /// segment lines is an error.
    pub fn parse(text: &str) -> Result<Self, GdError> {
        let mut segments = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                return Err(GdError::Format {
                    line: line_no,
                    msg: "empty line".into(),
                });
            }
            let strings: Vec<String> = line.split(',').map(|s| s.to_string()).collect();
            segments.push(Segment::new_at_line(strings, line_no)?);
        }
        GdString::new(segments)
    }

    /// Serializes back to the text format. `parse(to_text(t))` reproduces
    /// the segment structure exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for seg in &self.segments {
            out.push_str(&seg.strings.join(","));
            out.push('\n');
        }
        out
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, i: usize) -> &Segment {
        &self.segments[i]
    }

    /// Segment count `n`.
    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    pub fn metrics(&self) -> Metrics {
        let mut size = 0;
        let mut cardinality = 0;
        for seg in &self.segments {
            size += seg.len() * seg.width();
            cardinality += seg.len();
        }
        Metrics {
            num_segments: self.segments.len(),
            size,
            width: *self.prefix_widths.last().unwrap(),
            cardinality,
        }
    }

    /// Total width `W`.
    pub fn width(&self) -> usize {
        *self.prefix_widths.last().unwrap()
    }

    /// Columns occupied by segments before 0-based segment `i`, i.e.
    /// `sum(k_1..k_i)`.
    pub fn columns_before(&self, i: usize) -> usize {
        self.prefix_widths[i]
    }

    /// Global 1-based column of the `offset`-th character (1-based) of
    /// segment `segment` (1-based): `offset + sum of earlier widths`.
    pub fn column_of(&self, segment: usize, offset: usize) -> Result<usize, GdError> {
        if segment == 0 || segment > self.segments.len() {
            return Err(GdError::Index(format!(
                "segment {segment} out of range 1..={}",
                self.segments.len()
            )));
        }
        let k = self.segments[segment - 1].width();
        if offset == 0 || offset > k {
            return Err(GdError::Index(format!(
                "offset {offset} out of range 1..={k} in segment {segment}"
            )));
        }
        Ok(offset + self.prefix_widths[segment - 1])
    }
}

/// The pattern string `P` of length `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    text: String,
    chars: Vec<char>,
}

impl Pattern {
    pub fn new(text: impl Into<String>) -> Result<Self, GdError> {
        let text = text.into();
        let chars: Vec<char> = text.chars().collect();
        if chars.is_empty() {
            return Err(GdError::Argument("pattern must be non-empty".into()));
        }
        if chars.iter().any(|c| c.is_whitespace()) {
            return Err(GdError::Argument(
                "pattern must not contain whitespace".into(),
            ));
        }
        Ok(Pattern { text, chars })
    }

    /// Pattern length `m`.
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// A concrete occurrence of the pattern, reported with 1-based columns and
/// 1-based witness indices (presentation convention; internals are 0-based).
///
/// `witness` lists, for each spanned segment in order, which string was
/// chosen: `(segment, string)` pairs, both 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub start_column: usize,
    pub end_column: usize,
    pub witness: Vec<(usize, usize)>,
}

impl Occurrence {
    /// Rebuilds the matched text from the witness and checks it against the
    /// pattern; used by tests and report validation.
    pub fn verify(&self, gd: &GdString, pattern: &Pattern) -> bool {
        if self.end_column < self.start_column
            || self.end_column - self.start_column + 1 != pattern.len()
        {
            return false;
        }
        let mut spelled = Vec::new();
        for &(seg_1b, str_1b) in &self.witness {
            if seg_1b == 0 || seg_1b > gd.num_segments() {
                return false;
            }
            let seg = gd.segment(seg_1b - 1);
            if str_1b == 0 || str_1b > seg.len() {
                return false;
            }
            spelled.extend_from_slice(seg.chars_of(str_1b - 1));
        }
        let Some(&(first_seg, _)) = self.witness.first() else {
            return false;
        };
        let base_column = gd.columns_before(first_seg - 1) + 1;
        if self.start_column < base_column {
            return false;
        }
        let skip = self.start_column - base_column;
        if skip + pattern.len() > spelled.len() {
            return false;
        }
        &spelled[skip..skip + pattern.len()] == pattern.chars()
    }
}
