//! Inversion sequences and vincular pattern avoidance.
//!
//! An inversion sequence of length n satisfies 0 <= e_i <= i - 1.  A
//! vincular pattern is a word together with underlined blocks; letters in a
//! common block must be matched by adjacent positions.  The pattern (10)0,
//! for instance, occurs when an adjacent descent bottom reappears later.
//!
//! `phi_map` sends the sequences avoiding (10)0 to weak ascent sequences by
//! replacing each entry past the third with its rank among the values not
//! excluded as descent bottoms, and it preserves the positions of descents.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::WeakAscentSequence;

/// Replaces each letter by its rank among the distinct letters, so the
/// smallest becomes 0.
pub fn reduction<T: Ord + Copy>(word: &[T]) -> Vec<usize> {
    let distinct: BTreeSet<T> = word.iter().copied().collect();
    word.iter()
        .map(|v| distinct.iter().take_while(|d| *d < v).count())
        .collect()
}

/// A pattern word with underlined (adjacency-constrained) blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VincularPattern {
    letters: Vec<usize>,
    adjacent: Vec<bool>,
}

impl VincularPattern {
    /// `adjacent[s]` forces positions matching letters s and s + 1 to be
    /// consecutive.
    pub fn new(letters: Vec<usize>, adjacent: Vec<bool>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::invalid_input("pattern must be nonempty"));
        }
        if adjacent.len() + 1 != letters.len() {
            return Err(Error::invalid_input(
                "adjacency flags must pair consecutive letters",
            ));
        }
        if reduction(&letters) != letters {
            return Err(Error::invalid_input(
                "pattern letters must form an initial segment of 0, 1, 2, ...",
            ));
        }
        Ok(VincularPattern { letters, adjacent })
    }

    /// Parses notation like `(10)0`: digits, with parenthesised blocks
    /// marking adjacency.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut adjacent = Vec::new();
        let mut block_len: Option<usize> = None;
        for ch in s.chars() {
            match ch {
                '(' => {
                    if block_len.is_some() {
                        return Err(Error::invalid_input("nested block in pattern"));
                    }
                    block_len = Some(0);
                }
                ')' => match block_len.take() {
                    Some(len) if len >= 2 => {}
                    _ => return Err(Error::invalid_input("block must hold at least two letters")),
                },
                '0'..='9' => {
                    let v = ch as usize - '0' as usize;
                    if !letters.is_empty() {
                        adjacent.push(matches!(block_len, Some(len) if len > 0));
                    }
                    letters.push(v);
                    if let Some(len) = block_len.as_mut() {
                        *len += 1;
                    }
                }
                _ => {
                    return Err(Error::invalid_input(format!(
                        "unexpected character {ch:?} in pattern"
                    )))
                }
            }
        }
        if block_len.is_some() {
            return Err(Error::invalid_input("unclosed block in pattern"));
        }
        VincularPattern::new(letters, adjacent)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn adjacent(&self) -> &[bool] {
        &self.adjacent
    }

    /// The classical pattern with the same letters and no adjacency.
    pub fn classical(letters: Vec<usize>) -> Result<Self> {
        let flags = vec![false; letters.len().saturating_sub(1)];
        VincularPattern::new(letters, flags)
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut open = false;
        for (i, &v) in self.letters.iter().enumerate() {
            let starts = i < self.adjacent.len() && self.adjacent[i];
            let continues = i > 0 && self.adjacent[i - 1];
            if starts && !continues {
                write!(f, "(")?;
                open = true;
            }
            write!(f, "{v}")?;
            if open && !starts {
                write!(f, ")")?;
                open = false;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VincularPattern::parse(s)
    }
}

/// Whether the word holds an occurrence of the pattern.
pub(crate) fn word_contains(word: &[usize], pattern: &VincularPattern) -> bool {
    fn extend(word: &[usize], pattern: &VincularPattern, chosen: &mut Vec<usize>) -> bool {
        let s = chosen.len();
        if s == pattern.letters.len() {
            let values: Vec<usize> = chosen.iter().map(|&i| word[i]).collect();
            return reduction(&values) == pattern.letters;
        }
        if s > 0 && pattern.adjacent[s - 1] {
            let next = chosen[s - 1] + 1;
            if next >= word.len() {
                return false;
            }
            chosen.push(next);
            if extend(word, pattern, chosen) {
                return true;
            }
            chosen.pop();
            return false;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for i in start..word.len() {
            chosen.push(i);
            if extend(word, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    if word.len() < pattern.letters.len() {
        return false;
    }
    extend(word, pattern, &mut Vec::with_capacity(pattern.letters.len()))
}

/// The set of descent bottoms: values e_i with e_{i-1} > e_i.
pub fn descent_bottoms(word: &[usize]) -> BTreeSet<usize> {
    (1..word.len())
        .filter(|&i| word[i - 1] > word[i])
        .map(|i| word[i])
        .collect()
}

/// An inversion sequence; valid by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionSequence {
    entries: Vec<usize>,
}

impl InversionSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid_input("inversion sequence must be nonempty"));
        }
        for (i, &e) in entries.iter().enumerate() {
            if e > i {
                return Err(Error::invalid_input(format!(
                    "entry {e} at position {} exceeds {}",
                    i + 1,
                    i
                )));
            }
        }
        Ok(InversionSequence { entries })
    }

    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::invalid_input("entries must be nonnegative"));
        }
        InversionSequence::new(entries.iter().map(|&e| e as usize).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn contains(&self, pattern: &VincularPattern) -> bool {
        word_contains(&self.entries, pattern)
    }

    pub fn avoids(&self, patterns: &[VincularPattern]) -> bool {
        patterns.iter().all(|p| !self.contains(p))
    }

    pub fn descent_bottoms(&self) -> BTreeSet<usize> {
        descent_bottoms(&self.entries)
    }

    /// 1-based positions i with e_{i-1} > e_i.
    pub fn descent_positions(&self) -> BTreeSet<usize> {
        (1..self.entries.len())
            .filter(|&i| self.entries[i - 1] > self.entries[i])
            .map(|i| i + 1)
            .collect()
    }

    /// Whether no entry equals the position of a descent top, the position
    /// i of any pair e_i > e_{i+1}.
    pub fn is_posdt(&self) -> bool {
        let tops: BTreeSet<usize> = (1..self.entries.len())
            .filter(|&t| self.entries[t - 1] > self.entries[t])
            .collect();
        self.entries.iter().all(|e| !tops.contains(e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries).expect("serializing a vector of integers")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<i64> = serde_json::from_str(s)
            .map_err(|e| Error::invalid_input(format!("expected a JSON array of integers: {e}")))?;
        InversionSequence::from_signed(&raw)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The pattern whose avoiders correspond to weak ascent sequences.
pub fn pattern_100() -> VincularPattern {
    VincularPattern::parse("(10)0").expect("the pattern literal is well formed")
}

/// The companion pattern with an equal count of avoiders.
pub fn pattern_101() -> VincularPattern {
    VincularPattern::parse("(10)1").expect("the pattern literal is well formed")
}

/// Encodes a (10)0-avoider as a weak ascent sequence: entries past the
/// third are replaced by their rank among the values not yet excluded as
/// descent bottoms.
pub fn phi_map(e: &InversionSequence) -> Result<WeakAscentSequence> {
    if e.contains(&pattern_100()) {
        return Err(Error::domain("the sequence contains (10)0"));
    }
    let entries = e.entries();
    let n = entries.len();
    let mut w: Vec<usize> = entries[..n.min(3)].to_vec();
    for m in 3..n {
        let excluded = descent_bottoms(&entries[..m]);
        let rank = (0..entries[m])
            .filter(|v| !excluded.contains(v))
            .count();
        debug_assert!(
            !excluded.contains(&entries[m]),
            "an avoider never repeats a descent bottom"
        );
        w.push(rank);
    }
    WeakAscentSequence::new(w)
        .map_err(|err| Error::internal(format!("phi_map left the codomain: {err}")))
}

/// Inverse of phi_map.
pub fn phi_map_inverse(w: &WeakAscentSequence) -> InversionSequence {
    let went = w.entries();
    let n = went.len();
    let mut entries: Vec<usize> = went[..n.min(3)].to_vec();
    for m in 3..n {
        let excluded = descent_bottoms(&entries);
        let value = (0..=m)
            .filter(|v| !excluded.contains(v))
            .nth(went[m])
            .expect("every weak ascent sequence encodes an avoider");
        entries.push(value);
    }
    let result = InversionSequence::new(entries).expect("ranks stay within bounds");
    debug_assert!(!result.contains(&pattern_100()));
    result
}

/// All inversion sequences of length n, lexicographically.
pub fn generate_all(n: usize) -> Result<Vec<InversionSequence>> {
    if n == 0 {
        return Err(Error::invalid_input("length must be at least 1"));
    }
    let mut out = Vec::new();
    let mut entries = vec![0usize; n];
    loop {
        out.push(InversionSequence {
            entries: entries.clone(),
        });
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if entries[pos] < pos {
                entries[pos] += 1;
                break;
            }
            entries[pos] = 0;
        }
    }
}

/// All length-n inversion sequences avoiding every given pattern,
/// lexicographically.  Prefix pruning keeps the search near the output
/// size.
pub fn generate_avoiding(
    n: usize,
    patterns: &[VincularPattern],
) -> Result<Vec<InversionSequence>> {
    fn grow(
        n: usize,
        patterns: &[VincularPattern],
        prefix: &mut Vec<usize>,
        out: &mut Vec<InversionSequence>,
    ) {
        if prefix.len() == n {
            out.push(InversionSequence {
                entries: prefix.clone(),
            });
            return;
        }
        for v in 0..=prefix.len() {
            prefix.push(v);
            if patterns.iter().all(|p| !word_contains(prefix, p)) {
                grow(n, patterns, prefix, out);
            }
            prefix.pop();
        }
    }

    if n == 0 {
        return Err(Error::invalid_input("length must be at least 1"));
    }
    let mut out = Vec::new();
    grow(n, patterns, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// All length-n sequences in which no entry names a descent top position.
pub fn generate_posdt(n: usize) -> Result<Vec<InversionSequence>> {
    Ok(generate_all(n)?
        .into_iter()
        .filter(InversionSequence::is_posdt)
        .collect())
}
