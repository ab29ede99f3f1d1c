//! Upper-triangular binary matrices.
//!
//! A member with n ones is a square 0/1 matrix that is upper triangular,
//! has no empty column, and satisfies the adjacency condition: the topmost
//! 1 of every column sits weakly above the bottommost 1 of the column to
//! its right.  The dimension is not fixed by n; a member of dimension k
//! corresponds under omega to a weak ascent sequence with k - 1 weak
//! ascents.
//!
//! `reduce` deletes the topmost 1 of the last column (dropping the column
//! and the bottom row if the column empties) and records its row; `expand`
//! is the inverse.  Iterating reduce yields the bijection omega onto weak
//! ascent sequences.
//!
//! A weak entry is a position (k, l) holding the bottommost 1 of column l
//! while (k, l - 1) holds the topmost 1 of column l - 1.  Merging folds
//! column l onto column l - 1 and shrinks the matrix by one dimension; a
//! matrix is mergeable when its weak entries, taken left to right, can all
//! be merged without deleting a 1.  The mergeable members are exactly the
//! images of the classical ascent sequences.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::{self, WeakAscentSequence};

/// A square 0/1 matrix; `get`/`set` use 1-based row and column indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryMatrix {
    dim: usize,
    cells: Vec<bool>,
}

/// Statistics of a member matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixStats {
    pub dimension: usize,
    pub ones: usize,
    pub top_row_sum: usize,
    pub rightmost_column_sum: usize,
    pub topone: usize,
    pub nonzero_rows: usize,
}

/// Result of merging at a weak entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeOutcome {
    Merged(BinaryMatrix),
    /// The merge would delete a 1.
    NotMergeable,
}

impl BinaryMatrix {
    /// The 1x1 matrix holding a single 1.
    pub fn unit() -> Self {
        BinaryMatrix {
            dim: 1,
            cells: vec![true],
        }
    }

    fn zeros(dim: usize) -> Self {
        BinaryMatrix {
            dim,
            cells: vec![false; dim * dim],
        }
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::invalid_input("matrix must be nonempty"));
        }
        let mut m = BinaryMatrix::zeros(dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::invalid_input(format!(
                    "row {} has length {}, expected {dim}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(r + 1, c + 1, true),
                    other => {
                        return Err(Error::invalid_input(format!(
                            "entry {other} at ({}, {}) is not 0 or 1",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.cells[(r - 1) * self.dim + (c - 1)]
    }

    fn set(&mut self, r: usize, c: usize, v: bool) {
        self.cells[(r - 1) * self.dim + (c - 1)] = v;
    }

    /// Membership test: upper triangular, no empty column, adjacency.
    pub fn is_wmat(&self) -> bool {
        let k = self.dim;
        for r in 2..=k {
            for c in 1..r {
                if self.get(r, c) {
                    return false;
                }
            }
        }
        for c in 1..=k {
            if !(1..=c).any(|r| self.get(r, c)) {
                return false;
            }
        }
        for c in 1..k {
            let top_left = (1..=k).find(|&r| self.get(r, c)).expect("column nonempty");
            let bottom_right = (1..=k)
                .rev()
                .find(|&r| self.get(r, c + 1))
                .expect("column nonempty");
            if top_left > bottom_right {
                return false;
            }
        }
        true
    }

    /// Row of the topmost 1 in the rightmost column.
    ///
    /// Panics if the rightmost column is empty, which cannot happen for a
    /// member.
    pub fn topone(&self) -> usize {
        (1..=self.dim)
            .find(|&r| self.get(r, self.dim))
            .expect("members have a nonempty last column")
    }

    /// Clears the topmost 1 of the last column and records its row - 1.
    pub fn reduce(&self) -> Result<(BinaryMatrix, usize)> {
        if !self.is_wmat() {
            return Err(Error::domain("reduce is defined on members only"));
        }
        if self.ones() == 1 {
            return Err(Error::domain("the unit matrix cannot be reduced"));
        }
        Ok(self.reduce_unchecked())
    }

    fn reduce_unchecked(&self) -> (BinaryMatrix, usize) {
        let t = self.topone();
        let mut b = self.clone();
        b.set(t, self.dim, false);
        if (1..=self.dim).all(|r| !b.get(r, self.dim)) {
            b = b.shrink();
        }
        (b, t - 1)
    }

    /// Inverse of reduce: records a new 1 determined by i in [0, dim].
    pub fn expand(&self, i: usize) -> Result<BinaryMatrix> {
        if !self.is_wmat() {
            return Err(Error::domain("expand is defined on members only"));
        }
        if i > self.dim {
            return Err(Error::invalid_input(format!(
                "index {i} out of range 0..={}",
                self.dim
            )));
        }
        Ok(self.expand_unchecked(i))
    }

    fn expand_unchecked(&self, i: usize) -> BinaryMatrix {
        if i + 1 < self.topone() {
            let mut b = self.clone();
            b.set(i + 1, self.dim, true);
            b
        } else {
            let mut b = self.grow();
            b.set(i + 1, self.dim + 1, true);
            b
        }
    }

    fn grow(&self) -> BinaryMatrix {
        let mut b = BinaryMatrix::zeros(self.dim + 1);
        for r in 1..=self.dim {
            for c in 1..=self.dim {
                if self.get(r, c) {
                    b.set(r, c, true);
                }
            }
        }
        b
    }

    fn shrink(&self) -> BinaryMatrix {
        let mut b = BinaryMatrix::zeros(self.dim - 1);
        for r in 1..self.dim {
            for c in 1..self.dim {
                if self.get(r, c) {
                    b.set(r, c, true);
                }
            }
        }
        b
    }

    /// Weak entries, listed by column from left to right.
    pub fn weak_entries(&self) -> Vec<(usize, usize)> {
        let dim = self.dim;
        let mut out = Vec::new();
        for l in 2..=dim {
            let bottom = (1..=dim).rev().find(|&r| self.get(r, l));
            let top = (1..=dim).find(|&r| self.get(r, l - 1));
            if let (Some(k), Some(t)) = (bottom, top) {
                if k == t {
                    out.push((k, l));
                }
            }
        }
        out
    }

    /// Folds column l onto column l - 1 at the weak entry (k, l).
    ///
    /// The ones of column l above row k move one column left, the 1 at
    /// (k, l) is absorbed by the 1 at (k, l - 1), and the matrix shrinks by
    /// one dimension: rows up to l lose their column-l cell, rows below
    /// lose their diagonal cell, and the bottom row is dropped.  The merge
    /// succeeds when every discarded cell is zero.
    pub fn merge_at(&self, pos: (usize, usize)) -> Result<MergeOutcome> {
        if !self.weak_entries().contains(&pos) {
            return Err(Error::invalid_input(format!(
                "({}, {}) is not a weak entry",
                pos.0, pos.1
            )));
        }
        let (result, clean) = self.merge_raw(pos.0, pos.1);
        Ok(if clean {
            MergeOutcome::Merged(result)
        } else {
            MergeOutcome::NotMergeable
        })
    }

    fn merge_raw(&self, k: usize, l: usize) -> (BinaryMatrix, bool) {
        let n = self.dim;
        let mut work = self.clone();
        for i in 1..k {
            if work.get(i, l) {
                debug_assert!(!work.get(i, l - 1), "weak entry keeps column l - 1 clear");
                work.set(i, l - 1, true);
                work.set(i, l, false);
            }
        }
        work.set(k, l, false);

        let mut clean = true;
        for r in 1..=l {
            clean &= !work.get(r, l);
        }
        for j in l + 1..=n {
            clean &= !work.get(j, j);
        }
        for c in 1..=n {
            clean &= !work.get(n, c);
        }

        let mut out = BinaryMatrix::zeros(n - 1);
        for r in 1..n {
            let skip = if r <= l { l } else { r };
            let mut c_new = 0;
            for c in 1..=n {
                if c == skip {
                    continue;
                }
                c_new += 1;
                if work.get(r, c) {
                    out.set(r, c_new, true);
                }
            }
        }
        (out, clean)
    }

    /// Whether the weak entries can be merged left to right without ever
    /// deleting a 1.  Merging shifts the remaining entries one column left,
    /// which the loop tracks.
    pub fn is_mergeable(&self) -> bool {
        if !self.is_wmat() {
            return false;
        }
        let entries = self.weak_entries();
        let mut cur = self.clone();
        for (done, &(k, l)) in entries.iter().enumerate() {
            match cur
                .merge_at((k, l - done))
                .expect("weak entries stay weak entries as earlier columns merge")
            {
                MergeOutcome::Merged(next) => cur = next,
                MergeOutcome::NotMergeable => return false,
            }
        }
        true
    }

    pub fn stats(&self) -> MatrixStats {
        let dim = self.dim;
        MatrixStats {
            dimension: dim,
            ones: self.ones(),
            top_row_sum: (1..=dim).filter(|&c| self.get(1, c)).count(),
            rightmost_column_sum: (1..=dim).filter(|&r| self.get(r, dim)).count(),
            topone: self.topone(),
            nonzero_rows: (1..=dim)
                .filter(|&r| (1..=dim).any(|c| self.get(r, c)))
                .count(),
        }
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<u8>> = (1..=self.dim)
            .map(|r| (1..=self.dim).map(|c| u8::from(self.get(r, c))).collect())
            .collect();
        serde_json::to_string(&rows).expect("serializing nested vectors of integers")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| {
            Error::invalid_input(format!("expected a JSON array of 0/1 rows: {e}"))
        })?;
        let mut rows = Vec::with_capacity(raw.len());
        for row in raw {
            let mut bits = Vec::with_capacity(row.len());
            for v in row {
                match v {
                    0 => bits.push(0),
                    1 => bits.push(1),
                    other => {
                        return Err(Error::invalid_input(format!("entry {other} is not 0 or 1")))
                    }
                }
            }
            rows.push(bits);
        }
        BinaryMatrix::from_rows(&rows)
    }
}

/// Text form: one row per line, '0'/'1' characters.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.dim {
            if r > 1 {
                writeln!(f)?;
            }
            for c in 1..=self.dim {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
        }
        Ok(())
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '0' => row.push(0),
                    '1' => row.push(1),
                    other => {
                        return Err(Error::invalid_input(format!(
                            "unexpected character {other:?} in matrix text"
                        )))
                    }
                }
            }
            rows.push(row);
        }
        BinaryMatrix::from_rows(&rows)
    }
}

/// Encodes a member as a weak ascent sequence by iterated reduction.
pub fn omega(m: &BinaryMatrix) -> Result<WeakAscentSequence> {
    if !m.is_wmat() {
        return Err(Error::domain("omega is defined on members only"));
    }
    let mut labels = Vec::new();
    let mut cur = m.clone();
    while cur.ones() > 1 {
        let (b, i) = cur.reduce_unchecked();
        labels.push(i);
        cur = b;
    }
    debug_assert_eq!(cur, BinaryMatrix::unit());
    labels.push(0);
    labels.reverse();
    WeakAscentSequence::new(labels)
        .map_err(|e| Error::internal(format!("omega produced an invalid sequence: {e}")))
}

/// Rebuilds the member encoded by a weak ascent sequence.
pub fn omega_inv(x: &WeakAscentSequence) -> BinaryMatrix {
    let mut cur = BinaryMatrix::unit();
    for &i in &x.entries()[1..] {
        debug_assert!(i <= cur.dim());
        cur = cur.expand_unchecked(i);
    }
    cur
}

/// All members with n ones, ordered by their sequences under omega.
pub fn generate_wmat(n: usize) -> Result<Vec<BinaryMatrix>> {
    Ok(sequences::generate(n)?.iter().map(omega_inv).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn mat(rows: &[&str]) -> BinaryMatrix {
        rows.join("\n").parse().unwrap()
    }

    fn seq(entries: &[usize]) -> WeakAscentSequence {
        WeakAscentSequence::new(entries.to_vec()).unwrap()
    }

    /// Running example: omega maps it to 0 0 2 1 1 0 1 5.
    fn example_a() -> BinaryMatrix {
        mat(&["110100", "001110", "001000", "000000", "000000", "000001"])
    }

    #[test]
    fn membership() {
        assert!(BinaryMatrix::unit().is_wmat());
        assert!(example_a().is_wmat());
        assert!(mat(&["11", "00"]).is_wmat());
        assert!(mat(&["10", "01"]).is_wmat());
        // empty column
        assert!(!mat(&["10", "00"]).is_wmat());
        // below the diagonal
        assert!(!mat(&["01", "10"]).is_wmat());
        // topmost 1 of column 2 below the bottommost 1 of column 3
        assert!(!mat(&["101", "010", "000"]).is_wmat());
    }

    #[test]
    fn topone_examples() {
        assert_eq!(BinaryMatrix::unit().topone(), 1);
        assert_eq!(example_a().topone(), 6);
        assert_eq!(mat(&["11", "01"]).topone(), 1);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            mat(&["11", "00"]).reduce().unwrap(),
            (BinaryMatrix::unit(), 0)
        );
        assert_eq!(
            mat(&["10", "01"]).reduce().unwrap(),
            (BinaryMatrix::unit(), 1)
        );
        assert_eq!(
            mat(&["11", "01"]).reduce().unwrap(),
            (mat(&["10", "01"]), 0)
        );
        assert!(matches!(
            BinaryMatrix::unit().reduce(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(BinaryMatrix::unit().expand(0).unwrap(), mat(&["11", "00"]));
        assert_eq!(BinaryMatrix::unit().expand(1).unwrap(), mat(&["10", "01"]));
        assert!(matches!(
            BinaryMatrix::unit().expand(2),
            Err(Error::InvalidInput(_))
        ));

        // dimension grows only when i reaches topone - 1
        let a = mat(&["110100", "001110", "001000", "000001", "000000", "000001"]);
        let set_inside = a.expand(2).unwrap();
        assert_eq!(set_inside.dim(), 6);
        assert!(set_inside.get(3, 6));
        let grown = a.expand(4).unwrap();
        assert_eq!(grown.dim(), 7);
        assert!(grown.get(5, 7));
    }

    #[test]
    fn expand_undoes_reduce() {
        for n in 1..=6 {
            for x in sequences::generate(n).unwrap() {
                let m = omega_inv(&x);
                if m.ones() > 1 {
                    let (b, i) = m.reduce().unwrap();
                    assert_eq!(b.expand(i).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn omega_on_worked_example() {
        assert_eq!(omega(&example_a()).unwrap(), seq(&[0, 0, 2, 1, 1, 0, 1, 5]));
        assert_eq!(omega_inv(&seq(&[0, 0, 2, 1, 1, 0, 1, 5])), example_a());
    }

    #[test]
    fn omega_small_cases() {
        assert_eq!(omega(&BinaryMatrix::unit()).unwrap(), seq(&[0]));
        assert_eq!(omega(&mat(&["11", "01"])).unwrap(), seq(&[0, 1, 0]));
        assert_eq!(omega_inv(&seq(&[0, 1, 0])), mat(&["11", "01"]));
        assert_eq!(omega_inv(&seq(&[0, 0])), mat(&["11", "00"]));
        assert!(matches!(omega(&mat(&["10", "00"])), Err(Error::Domain(_))));
    }

    #[test]
    fn round_trip_and_invariants() {
        for n in 1..=6 {
            for x in sequences::generate(n).unwrap() {
                let m = omega_inv(&x);
                assert!(m.is_wmat());
                assert_eq!(m.ones(), n);
                assert_eq!(m.dim(), x.wasc_count() + 1);
                assert_eq!(m.topone(), x.last() + 1);
                assert_eq!(omega(&m).unwrap(), x);
            }
        }
    }

    #[test]
    fn two_by_two_and_three_one_members_are_exact() {
        let expected_2: BTreeSet<BinaryMatrix> =
            [mat(&["11", "00"]), mat(&["10", "01"])].into_iter().collect();
        let got_2: BTreeSet<BinaryMatrix> = generate_wmat(2).unwrap().into_iter().collect();
        assert_eq!(got_2, expected_2);

        let expected_3: BTreeSet<BinaryMatrix> = [
            mat(&["11", "01"]),
            mat(&["111", "000", "000"]),
            mat(&["110", "001", "000"]),
            mat(&["110", "000", "001"]),
            mat(&["100", "011", "000"]),
            mat(&["100", "010", "001"]),
        ]
        .into_iter()
        .collect();
        let got_3: BTreeSet<BinaryMatrix> = generate_wmat(3).unwrap().into_iter().collect();
        assert_eq!(got_3, expected_3);
    }

    #[test]
    fn four_one_members_are_exact() {
        let expected: BTreeSet<BinaryMatrix> = [
            mat(&["111", "001", "000"]),
            mat(&["111", "000", "001"]),
            mat(&["110", "001", "001"]),
            mat(&["111", "010", "000"]),
            mat(&["110", "011", "000"]),
            mat(&["110", "010", "001"]),
            mat(&["101", "011", "000"]),
            mat(&["101", "010", "001"]),
            mat(&["100", "011", "001"]),
            mat(&["1111", "0000", "0000", "0000"]),
            mat(&["1110", "0001", "0000", "0000"]),
            mat(&["1110", "0000", "0001", "0000"]),
            mat(&["1110", "0000", "0000", "0001"]),
            mat(&["1100", "0011", "0000", "0000"]),
            mat(&["1100", "0010", "0001", "0000"]),
            mat(&["1100", "0010", "0000", "0001"]),
            mat(&["1100", "0000", "0011", "0000"]),
            mat(&["1100", "0000", "0010", "0001"]),
            mat(&["1000", "0111", "0000", "0000"]),
            mat(&["1000", "0110", "0001", "0000"]),
            mat(&["1000", "0110", "0000", "0001"]),
            mat(&["1000", "0100", "0011", "0000"]),
            mat(&["1000", "0100", "0010", "0001"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(expected.len(), 23);
        let got: BTreeSet<BinaryMatrix> = generate_wmat(4).unwrap().into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn counts_match_known_values() {
        let expected = [1usize, 2, 6, 23, 106, 567];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(generate_wmat(i + 1).unwrap().len(), count);
        }
    }

    fn example_c() -> BinaryMatrix {
        mat(&["110100", "011110", "001000", "000000", "000000", "000001"])
    }

    fn example_d() -> BinaryMatrix {
        mat(&["110011", "001110", "000101", "000000", "000000", "000000"])
    }

    #[test]
    fn weak_entry_listings() {
        assert_eq!(example_c().weak_entries(), vec![(2, 4)]);
        assert_eq!(example_d().weak_entries(), vec![(1, 2), (2, 5)]);
        assert_eq!(mat(&["10", "01"]).weak_entries(), Vec::<(usize, usize)>::new());
    }

    #[test]
    fn merge_mechanics_on_worked_examples() {
        // the forced merge of C deletes the 1 at (6, 6)
        let (forced, clean) = example_c().merge_raw(2, 4);
        assert!(!clean);
        assert_eq!(
            forced,
            mat(&["11100", "01110", "00100", "00000", "00000"])
        );
        assert_eq!(
            example_c().merge_at((2, 4)).unwrap(),
            MergeOutcome::NotMergeable
        );

        let d1 = mat(&["10011", "01110", "00101", "00000", "00000"]);
        let d2 = mat(&["1011", "0110", "0011", "0000"]);
        assert_eq!(
            example_d().merge_at((1, 2)).unwrap(),
            MergeOutcome::Merged(d1.clone())
        );
        assert_eq!(d1.merge_at((2, 4)).unwrap(), MergeOutcome::Merged(d2));

        assert!(matches!(
            example_d().merge_at((3, 3)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn mergeable_verdicts() {
        assert!(example_d().is_mergeable());
        assert!(!example_c().is_mergeable());
        // no weak entries at all
        assert!(mat(&["10", "01"]).is_mergeable());
    }

    #[test]
    fn mergeable_members_are_the_ascent_sequence_images() {
        for n in 1..=6 {
            let mergeable: BTreeSet<BinaryMatrix> = generate_wmat(n)
                .unwrap()
                .into_iter()
                .filter(|m| m.is_mergeable())
                .collect();
            let images: BTreeSet<BinaryMatrix> = sequences::generate_ascent_sequences(n)
                .unwrap()
                .iter()
                .map(omega_inv)
                .collect();
            assert_eq!(mergeable, images, "n = {n}");
        }
    }

    #[test]
    fn plateaus_match_weak_entries() {
        for n in 1..=6 {
            for x in sequences::generate(n).unwrap() {
                let m = omega_inv(&x);
                assert_eq!(
                    m.weak_entries().len(),
                    x.stats().plateau_positions.len(),
                    "{x}"
                );
            }
        }
    }

    #[test]
    fn stats_on_worked_example() {
        let s = example_a().stats();
        assert_eq!(s.dimension, 6);
        assert_eq!(s.ones, 8);
        assert_eq!(s.top_row_sum, 3);
        assert_eq!(s.rightmost_column_sum, 1);
        assert_eq!(s.topone, 6);
        assert_eq!(s.nonzero_rows, 4);
    }

    #[test]
    fn text_and_json_round_trips() {
        let m = example_a();
        assert_eq!(m.to_string().parse::<BinaryMatrix>().unwrap(), m);
        assert_eq!(BinaryMatrix::from_json(&m.to_json()).unwrap(), m);
        assert_eq!(mat(&["11", "01"]).to_json(), "[[1,1],[0,1]]");
        assert!(BinaryMatrix::from_json("[[1,0],[0]]").is_err());
        assert!(BinaryMatrix::from_json("[[2]]").is_err());
        assert!("1x".parse::<BinaryMatrix>().is_err());
    }
}
