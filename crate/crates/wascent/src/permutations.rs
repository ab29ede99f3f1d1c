//! Weak Fishburn permutations.
//!
//! A permutation contains the bivincular pattern W if there are positions
//! i < j < k < l with j = i + 1, values p_k < p_l < p_i < p_j, and
//! p_i = p_l + 1.  The pattern F drops the witness k: positions i, l with
//! i + 1 < l, p_i = p_l + 1 and p_l < p_i < p_{i+1}.  Every W occurrence
//! contains an F occurrence, so F avoiders (the Fishburn permutations) form
//! a subset of the W avoiders studied here.
//!
//! The bijection gamma encodes a W avoider as a weak ascent sequence by
//! repeatedly deleting the maximal entry and recording the label of the
//! active site it occupied.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::WeakAscentSequence;

/// Largest n accepted by the generators unless a caller raises the limit.
pub const DEFAULT_PERMUTATION_CUTOFF: usize = 9;

/// A permutation of 1..=n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

/// The two patterns of interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// F, whose avoiders are the Fishburn permutations.
    Fishburn,
    /// W, whose avoiders are counted by the weak ascent sequences.
    WeakFishburn,
}

/// Active sites of a W avoider: the gaps where n + 1 can be inserted so the
/// result still avoids W.  Gap g lies after the g-th entry, so gaps 0 and n
/// are the ends; labels count the active gaps from left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveSites {
    positions: Vec<usize>,
}

impl ActiveSites {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn count(&self) -> usize {
        self.positions.len()
    }

    /// Label of the given gap, if that gap is active.
    pub fn label_of_gap(&self, gap: usize) -> Option<usize> {
        self.positions.iter().position(|&g| g == gap)
    }
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::invalid_input("permutation must be nonempty"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v > n || seen[v] {
                return Err(Error::invalid_input(format!(
                    "not a permutation of 1..={n}: {values:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn from_signed(values: &[i64]) -> Result<Self> {
        if values.iter().any(|&v| v < 1) {
            return Err(Error::invalid_input(format!(
                "not a permutation of 1..=n: {values:?}"
            )));
        }
        Permutation::new(values.iter().map(|&v| v as usize).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn contains_pattern(&self, pattern: Pattern) -> bool {
        match pattern {
            Pattern::Fishburn => self.contains_f(),
            Pattern::WeakFishburn => self.contains_w(),
        }
    }

    fn contains_f(&self) -> bool {
        let v = &self.values;
        let n = v.len();
        for i in 0..n.saturating_sub(1) {
            for l in i + 2..n {
                if v[i] == v[l] + 1 && v[l] < v[i] && v[i] < v[i + 1] {
                    return true;
                }
            }
        }
        false
    }

    fn contains_w(&self) -> bool {
        let v = &self.values;
        let n = v.len();
        for i in 0..n.saturating_sub(1) {
            let j = i + 1;
            for k in j + 1..n {
                for l in k + 1..n {
                    if v[i] == v[l] + 1 && v[k] < v[l] && v[l] < v[i] && v[i] < v[j] {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.values).expect("serializing a vector of integers")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<i64> = serde_json::from_str(s)
            .map_err(|e| Error::invalid_input(format!("expected a JSON array of integers: {e}")))?;
        Permutation::from_signed(&raw)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Active sites of a W avoider, labelled left to right.
pub fn active_sites(p: &Permutation) -> Result<ActiveSites> {
    if p.contains_w() {
        return Err(Error::domain(format!(
            "active sites are defined for W avoiders only: {p}"
        )));
    }
    Ok(ActiveSites {
        positions: active_site_positions(&p.values),
    })
}

/// Gap g (after the g-th entry) is active when the entry t before it is at
/// most 2, or t - 1 occurs to its left, or t - 1 occurs to its right with no
/// smaller value strictly between the two.  The outer gaps are always active.
fn active_site_positions(values: &[usize]) -> Vec<usize> {
    let n = values.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in values.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut sites = vec![0usize];
    for g in 1..n {
        let t = values[g - 1];
        let active = t <= 2 || {
            let p = pos[t - 1];
            p < g || (g..p - 1).all(|q| values[q] >= t - 1)
        };
        if active {
            sites.push(g);
        }
    }
    sites.push(n);
    sites
}

/// Inserts n + 1 at the active site with the given label.
pub fn insert_max(p: &Permutation, label: usize) -> Result<Permutation> {
    let sites = active_sites(p)?;
    let &gap = sites.positions().get(label).ok_or_else(|| {
        Error::invalid_input(format!(
            "label {label} out of range: {} active sites",
            sites.count()
        ))
    })?;
    let mut values = p.values.clone();
    values.insert(gap, values.len() + 1);
    debug_assert!(!Permutation { values: values.clone() }.contains_w());
    Ok(Permutation { values })
}

/// Encodes a W avoider as a weak ascent sequence.
pub fn gamma(p: &Permutation) -> Result<WeakAscentSequence> {
    if p.contains_w() {
        return Err(Error::domain(format!("gamma is defined on W avoiders: {p}")));
    }
    let mut labels = Vec::with_capacity(p.len());
    let mut values = p.values.clone();
    while values.len() > 1 {
        let n = values.len();
        let gap = values
            .iter()
            .position(|&v| v == n)
            .expect("a permutation contains its maximum");
        values.remove(gap);
        let sites = active_site_positions(&values);
        let label = sites.iter().position(|&g| g == gap).ok_or_else(|| {
            Error::internal(format!("maximum of {p} does not sit at an active site"))
        })?;
        labels.push(label);
    }
    labels.push(0);
    labels.reverse();
    WeakAscentSequence::new(labels)
        .map_err(|e| Error::internal(format!("gamma produced an invalid sequence: {e}")))
}

/// Rebuilds the W avoider encoded by a weak ascent sequence.
pub fn gamma_inv(x: &WeakAscentSequence) -> Permutation {
    let mut values = vec![1usize];
    for &label in &x.entries()[1..] {
        let sites = active_site_positions(&values);
        let gap = *sites
            .get(label)
            .expect("weak ascent growth stays within the active sites");
        values.insert(gap, values.len() + 1);
    }
    Permutation { values }
}

/// How to enumerate the W avoiders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerationMode {
    /// Check every permutation of 1..=n against the pattern.
    FilterAll,
    /// Grow avoiders by inserting maxima at active sites.
    Insertion,
}

/// All W avoiders of 1..=n in lexicographic order.
pub fn generate_weak_fishburn(n: usize, mode: GenerationMode) -> Result<Vec<Permutation>> {
    generate_weak_fishburn_with_cutoff(n, mode, DEFAULT_PERMUTATION_CUTOFF)
}

pub fn generate_weak_fishburn_with_cutoff(
    n: usize,
    mode: GenerationMode,
    cutoff: usize,
) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::invalid_input("length must be at least 1"));
    }
    if n > cutoff {
        return Err(Error::resource_limit(format!(
            "n = {n} exceeds the permutation cutoff {cutoff}"
        )));
    }
    match mode {
        GenerationMode::FilterAll => Ok(all_permutations(n)
            .into_iter()
            .filter(|p| !p.contains_w())
            .collect()),
        GenerationMode::Insertion => {
            let mut current = vec![Permutation { values: vec![1] }];
            for _ in 1..n {
                let mut next = Vec::new();
                for p in &current {
                    for &gap in &active_site_positions(&p.values) {
                        let mut values = p.values.clone();
                        values.insert(gap, values.len() + 1);
                        next.push(Permutation { values });
                    }
                }
                current = next;
            }
            current.sort();
            Ok(current)
        }
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    place(&mut prefix, &mut used, n, &mut out);
    out
}

fn place(prefix: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation {
            values: prefix.clone(),
        });
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            prefix.push(v);
            place(prefix, used, n, out);
            prefix.pop();
            used[v] = false;
        }
    }
}
