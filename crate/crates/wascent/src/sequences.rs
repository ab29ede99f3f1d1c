//! Weak ascent sequences.
//!
//! A sequence x_1 x_2 ... x_n of nonnegative integers is a weak ascent
//! sequence if x_1 = 0 and x_{i+1} <= 1 + wasc(x_1 ... x_i) for all i, where
//! wasc counts the weak ascents, the positions i with x_i <= x_{i+1}.
//! Requiring strict ascents instead yields the classical ascent sequences,
//! which form a subset.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Number of weak ascents of a nonempty sequence.
pub fn wasc<T: PartialOrd>(x: &[T]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::invalid_input("wasc of an empty sequence"));
    }
    Ok(x.windows(2).filter(|w| w[0] <= w[1]).count())
}

/// Tests the defining growth condition on a raw integer sequence.
pub fn is_weak_ascent_sequence(x: &[i64]) -> bool {
    if x.first() != Some(&0) {
        return false;
    }
    let mut weak_ascents: i64 = 0;
    for i in 1..x.len() {
        if x[i] < 0 || x[i] > 1 + weak_ascents {
            return false;
        }
        if x[i - 1] <= x[i] {
            weak_ascents += 1;
        }
    }
    true
}

/// A weak ascent sequence; valid by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakAscentSequence {
    entries: Vec<usize>,
}

/// Statistics of a weak ascent sequence.
///
/// `plateau_positions` holds the 1-based indices i >= 2 with x_i = x_{i-1}.
/// A right-to-left maximum is an entry strictly greater than everything
/// after it.  `final_descent_run` is the length of the longest strictly
/// decreasing suffix; it equals the rightmost column sum of the matrix
/// image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceStats {
    pub wasc_count: usize,
    pub zero_count: usize,
    pub r2l_max_count: usize,
    pub final_descent_run: usize,
    pub last_entry: usize,
    pub plateau_positions: BTreeSet<usize>,
    pub is_ascent_sequence: bool,
    pub is_weakly_increasing: bool,
    pub is_bounded_descent: bool,
}

impl WeakAscentSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let raw: Vec<i64> = entries.iter().map(|&v| v as i64).collect();
        if !is_weak_ascent_sequence(&raw) {
            return Err(Error::invalid_input(format!(
                "not a weak ascent sequence: {raw:?}"
            )));
        }
        Ok(WeakAscentSequence { entries })
    }

    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if !is_weak_ascent_sequence(entries) {
            return Err(Error::invalid_input(format!(
                "not a weak ascent sequence: {entries:?}"
            )));
        }
        Ok(WeakAscentSequence {
            entries: entries.iter().map(|&v| v as usize).collect(),
        })
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

    pub fn last(&self) -> usize {
        *self.entries.last().expect("sequences are nonempty")
    }

    pub fn wasc_count(&self) -> usize {
        self.entries.windows(2).filter(|w| w[0] <= w[1]).count()
    }

    /// All one-entry extensions, in increasing order of the new entry.
    pub fn children(&self) -> Vec<WeakAscentSequence> {
        let bound = 1 + self.wasc_count();
        (0..=bound)
            .map(|v| {
                let mut entries = self.entries.clone();
                entries.push(v);
                WeakAscentSequence { entries }
            })
            .collect()
    }

    pub fn stats(&self) -> SequenceStats {
        let e = &self.entries;
        let n = e.len();

        let mut r2l_max_count = 0;
        let mut running_max: Option<usize> = None;
        for &v in e.iter().rev() {
            if running_max.map_or(true, |m| v > m) {
                r2l_max_count += 1;
                running_max = Some(v);
            }
        }

        let mut is_ascent_sequence = true;
        let mut ascents = 0;
        for i in 1..n {
            if e[i] > 1 + ascents {
                is_ascent_sequence = false;
                break;
            }
            if e[i - 1] < e[i] {
                ascents += 1;
            }
        }

        let mut final_descent_run = 1;
        while final_descent_run < n && e[n - final_descent_run - 1] > e[n - final_descent_run] {
            final_descent_run += 1;
        }

        SequenceStats {
            wasc_count: self.wasc_count(),
            zero_count: e.iter().filter(|&&v| v == 0).count(),
            r2l_max_count,
            final_descent_run,
            last_entry: e[n - 1],
            plateau_positions: (1..n).filter(|&i| e[i] == e[i - 1]).map(|i| i + 1).collect(),
            is_ascent_sequence,
            is_weakly_increasing: e.windows(2).all(|w| w[0] <= w[1]),
            is_bounded_descent: e.windows(2).all(|w| w[1] + 1 >= w[0]),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries).expect("serializing a vector of integers")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<i64> = serde_json::from_str(s)
            .map_err(|e| Error::invalid_input(format!("expected a JSON array of integers: {e}")))?;
        WeakAscentSequence::from_signed(&raw)
    }
}

impl fmt::Display for WeakAscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All weak ascent sequences of length n, in lexicographic order.
pub fn generate(n: usize) -> Result<Vec<WeakAscentSequence>> {
    generate_tree(n, Growth::Weak)
}

/// All ascent sequences of length n, in lexicographic order.
///
/// Every ascent sequence is also a weak ascent sequence, so the result
/// reuses the same type.
pub fn generate_ascent_sequences(n: usize) -> Result<Vec<WeakAscentSequence>> {
    generate_tree(n, Growth::Strict)
}

#[derive(Clone, Copy)]
enum Growth {
    Weak,
    Strict,
}

fn generate_tree(n: usize, growth: Growth) -> Result<Vec<WeakAscentSequence>> {
    if n == 0 {
        return Err(Error::invalid_input("length must be at least 1"));
    }
    let mut out = Vec::new();
    let mut prefix = vec![0usize];
    extend(&mut prefix, 0, n, growth, &mut out);
    Ok(out)
}

fn extend(
    prefix: &mut Vec<usize>,
    ascent_stat: usize,
    n: usize,
    growth: Growth,
    out: &mut Vec<WeakAscentSequence>,
) {
    if prefix.len() == n {
        out.push(WeakAscentSequence {
            entries: prefix.clone(),
        });
        return;
    }
    let last = *prefix.last().expect("prefix starts nonempty");
    for v in 0..=1 + ascent_stat {
        let step = match growth {
            Growth::Weak => usize::from(last <= v),
            Growth::Strict => usize::from(last < v),
        };
        prefix.push(v);
        extend(prefix, ascent_stat + step, n, growth, out);
        prefix.pop();
    }
}
