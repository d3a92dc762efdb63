//! Per-segment forward and backward tries.
//!
//! The forward trie spells a segment's strings root-to-leaf; the backward
//! trie spells their reversals. Together they answer the three per-segment
//! queries the shift-thread engine needs in O(probe length): exact
//! membership, "is this a prefix of some string", and (via the backward
//! trie with a reversed probe) "is this a suffix of some string".
//!
//! These tries are an optimization for the classical engine only; the
//! Grover simulation intentionally works without any preprocessing.

use std::collections::BTreeMap;

use crate::gd_core::{GdError, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrieDirection {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Default)]
struct Node {
    children: BTreeMap<char, usize>,
    leaf: bool,
}

/// A trie over one segment's strings (or their reversals).
#[derive(Debug, Clone)]
pub struct SegmentTrie {
    direction: TrieDirection,
    width: usize,
    nodes: Vec<Node>,
    leaves: usize,
}

/// Trie over the segment's strings as written.
pub fn build_forward(seg: &Segment) -> SegmentTrie {
    build(seg, TrieDirection::Forward)
}

/// Trie over the reversals of the segment's strings. Querying it with a
/// reversed probe answers suffix questions about the original strings.
pub fn build_backward(seg: &Segment) -> SegmentTrie {
    build(seg, TrieDirection::Backward)
}

fn build(seg: &Segment, direction: TrieDirection) -> SegmentTrie {
    let mut trie = SegmentTrie {
        direction,
        width: seg.width(),
        nodes: vec![Node::default()],
        leaves: 0,
    };
    for s in 0..seg.len() {
        let chars = seg.chars_of(s);
        match direction {
            TrieDirection::Forward => trie.insert(chars.iter().copied()),
            TrieDirection::Backward => trie.insert(chars.iter().rev().copied()),
        }
    }
    trie
}

impl SegmentTrie {
    fn insert(&mut self, word: impl Iterator<Item = char>) {
        let mut at = 0;
        for c in word {
            let next = match self.nodes[at].children.get(&c) {
                Some(&n) => n,
                None => {
                    self.nodes.push(Node::default());
                    let n = self.nodes.len() - 1;
                    self.nodes[at].children.insert(c, n);
                    n
                }
            };
            at = next;
        }
        if !self.nodes[at].leaf {
            self.nodes[at].leaf = true;
            self.leaves += 1;
        }
    }

    pub fn direction(&self) -> TrieDirection {
        self.direction
    }

    /// Width of the underlying segment; every root-to-leaf path has this
    /// length.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    fn walk(&self, probe: &[char]) -> Option<usize> {
        let mut at = 0;
        for c in probe {
            at = *self.nodes[at].children.get(c)?;
        }
        Some(at)
    }

    /// Whole-word membership. For a backward trie the stored words are the
    /// reversals, so this reports whether `reverse(probe)` is in the
    /// segment. The probe must have exactly the segment width.
    pub fn contains_exact(&self, probe: &[char]) -> Result<bool, GdError> {
        if probe.len() != self.width {
            return Err(GdError::Argument(format!(
                "probe length {} does not match segment width {}",
                probe.len(),
                self.width
            )));
        }
        Ok(self.walk(probe).is_some_and(|n| self.nodes[n].leaf))
    }

    /// True when some stored word starts with `probe`; the empty probe is
    /// always a prefix. Probes longer than the width are rejected.
    pub fn has_prefix(&self, probe: &[char]) -> Result<bool, GdError> {
        if probe.len() > self.width {
            return Err(GdError::Argument(format!(
                "probe length {} exceeds segment width {}",
                probe.len(),
                self.width
            )));
        }
        Ok(self.walk(probe).is_some())
    }

    /// Every stored word, spelled root to leaf (reversed strings for a
    /// backward trie). Sorted because children are ordered.
    pub fn words(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.leaves);
        let mut stack: Vec<(usize, String)> = vec![(0, String::new())];
        while let Some((at, prefix)) = stack.pop() {
            let node = &self.nodes[at];
            if node.leaf {
                out.push(prefix.clone());
            }
            // reverse so the in-order child comes off the stack first
            for (&c, &n) in node.children.iter().rev() {
                let mut next = prefix.clone();
                next.push(c);
                stack.push((n, next));
            }
        }
        out.sort();
        out
    }
}
