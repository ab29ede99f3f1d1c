//! Weakly (3+1)-free factorial posets.
//!
//! A factorial poset on 1..=n is naturally labelled (i <_P j implies i < j)
//! and satisfies: i < j and j <_P k imply i <_P k.  Its structure is fully
//! captured by the downset sizes d_j = |{i : i <_P j}|, each downset being
//! the initial segment 1..=d_j; conversely every vector with 0 <= d_j < j
//! defines such a poset.
//!
//! The posets in bijection with weak ascent sequences are those avoiding a
//! special 3+1 configuration: elements i < j < j+1 < k with i <_P j <_P k a
//! chain and j+1 incomparable to all three.  In downset terms this forces
//! d_k = j and d_{j+1} < i <= d_j.
//!
//! `psi` reads a poset off a binary matrix member by numbering its ones
//! column by column, bottom to top; `phi` inverts it by splitting the level
//! decomposition until every cell of the resulting grid is a singleton.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrices::{self, BinaryMatrix};

/// A witness for the special 3+1 configuration on i < j < j+1 < k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialThreePlusOne {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Scans all triples i < j < j+1 < k for the special configuration.
pub fn find_special_three_plus_one(downset_sizes: &[usize]) -> Option<SpecialThreePlusOne> {
    let n = downset_sizes.len();
    let d = |j: usize| downset_sizes[j - 1];
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 2..=n {
                if i <= d(j) && d(k) == j && d(j + 1) < i {
                    return Some(SpecialThreePlusOne { i, j, k });
                }
            }
        }
    }
    None
}

/// A weakly (3+1)-free factorial poset; valid by construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorialPoset {
    downset_sizes: Vec<usize>,
}

/// The distinct strict downsets of a poset, ordered by inclusion, with the
/// level L_i collecting the elements whose downset is the i-th one.  Every
/// downset is an initial segment, so it is recorded by its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub downset_sizes: Vec<usize>,
    pub levels: Vec<Vec<usize>>,
}

impl FactorialPoset {
    pub fn new(downset_sizes: Vec<usize>) -> Result<Self> {
        for (idx, &d) in downset_sizes.iter().enumerate() {
            if d > idx {
                return Err(Error::invalid_input(format!(
                    "downset size {d} of element {} exceeds {}",
                    idx + 1,
                    idx
                )));
            }
        }
        if downset_sizes.is_empty() {
            return Err(Error::invalid_input("poset must be nonempty"));
        }
        if let Some(w) = find_special_three_plus_one(&downset_sizes) {
            return Err(Error::domain(format!(
                "special 3+1 configuration on ({}, {}, {}, {})",
                w.i,
                w.j,
                w.j + 1,
                w.k
            )));
        }
        Ok(FactorialPoset { downset_sizes })
    }

    /// Builds the poset from a strict partial order given as related pairs.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid_input("poset must be nonempty"));
        }
        let mut less = vec![vec![false; n + 1]; n + 1];
        for &(a, b) in relations {
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::invalid_input(format!(
                    "pair ({a}, {b}) out of range 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::invalid_input(format!("reflexive pair ({a}, {a})")));
            }
            less[a][b] = true;
        }
        for a in 1..=n {
            for b in 1..=n {
                if less[a][b] && less[b][a] {
                    return Err(Error::invalid_input(format!(
                        "both ({a}, {b}) and ({b}, {a}) present"
                    )));
                }
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    if less[a][b] && less[b][c] && !less[a][c] {
                        return Err(Error::invalid_input(format!(
                            "not transitively closed: ({a}, {b}) and ({b}, {c}) without ({a}, {c})"
                        )));
                    }
                }
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                if less[a][b] && a > b {
                    return Err(Error::domain(format!(
                        "not naturally labelled: {a} <_P {b} with {a} > {b}"
                    )));
                }
            }
        }
        for j in 1..=n {
            for k in 1..=n {
                if less[j][k] {
                    for i in 1..j {
                        if !less[i][k] {
                            return Err(Error::domain(format!(
                                "not factorial: {j} <_P {k} but {i} is incomparable to {k}"
                            )));
                        }
                    }
                }
            }
        }
        let downset_sizes: Vec<usize> = (1..=n)
            .map(|j| (1..=n).filter(|&i| less[i][j]).count())
            .collect();
        FactorialPoset::new(downset_sizes)
    }

    pub fn n(&self) -> usize {
        self.downset_sizes.len()
    }

    pub fn downset_sizes(&self) -> &[usize] {
        &self.downset_sizes
    }

    /// The strict order: i <_P j iff i <= d_j.
    pub fn less(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.n() && i <= self.downset_sizes[j - 1]
    }

    /// All related pairs, lexicographically.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.downset_sizes[j - 1] == 0)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.downset_sizes.iter().all(|&d| d < j))
            .collect()
    }

    pub fn levels(&self) -> LevelDecomposition {
        let sizes: BTreeSet<usize> = self.downset_sizes.iter().copied().collect();
        let downset_sizes: Vec<usize> = sizes.into_iter().collect();
        let levels = downset_sizes
            .iter()
            .map(|&s| {
                (1..=self.n())
                    .filter(|&j| self.downset_sizes[j - 1] == s)
                    .collect()
            })
            .collect();
        LevelDecomposition {
            downset_sizes,
            levels,
        }
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"n\":{},\"downset_sizes\":{}}}",
            self.n(),
            serde_json::to_string(&self.downset_sizes).expect("serializing a vector of integers")
        )
    }

    /// Accepts `downset_sizes` or a `relations` list alongside `n`.
    pub fn from_json(s: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(s)
            .map_err(|e| Error::invalid_input(format!("expected a JSON object: {e}")))?;
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::invalid_input("missing field \"n\""))? as usize;
        if let Some(ds) = value.get("downset_sizes") {
            let sizes: Vec<i64> = serde_json::from_value(ds.clone())
                .map_err(|e| Error::invalid_input(format!("bad downset_sizes: {e}")))?;
            if sizes.len() != n || sizes.iter().any(|&d| d < 0) {
                return Err(Error::invalid_input(format!(
                    "downset_sizes must hold {n} nonnegative entries"
                )));
            }
            FactorialPoset::new(sizes.into_iter().map(|d| d as usize).collect())
        } else if let Some(rel) = value.get("relations") {
            let pairs: Vec<(usize, usize)> = serde_json::from_value(rel.clone())
                .map_err(|e| Error::invalid_input(format!("bad relations: {e}")))?;
            FactorialPoset::from_relations(n, &pairs)
        } else {
            Err(Error::invalid_input(
                "expected \"downset_sizes\" or \"relations\"",
            ))
        }
    }
}

impl fmt::Display for FactorialPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.downset_sizes.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Reads the poset off a member matrix: ones are numbered column by column,
/// bottom to top within a column, and i <_P j iff the column of i precedes
/// the row of j.
pub fn psi(m: &BinaryMatrix) -> Result<FactorialPoset> {
    if !m.is_wmat() {
        return Err(Error::domain("psi is defined on members only"));
    }
    let dim = m.dim();
    let mut rows = Vec::new();
    for c in 1..=dim {
        for r in (1..=c).rev() {
            if m.get(r, c) {
                rows.push(r);
            }
        }
    }
    let mut ones_before_column = vec![0usize; dim + 1];
    for c in 1..=dim {
        ones_before_column[c] =
            ones_before_column[c - 1] + (1..=c).filter(|&r| m.get(r, c)).count();
    }
    let downset_sizes: Vec<usize> = rows.iter().map(|&r| ones_before_column[r - 1]).collect();
    FactorialPoset::new(downset_sizes)
        .map_err(|e| Error::internal(format!("psi produced an invalid poset: {e}")))
}

/// The level-decomposition grid: cell (i, j) holds the elements of level
/// i - 1 lying in the j-th gap between consecutive distinct downsets.  For
/// elements a < b the column of a never lies right of the column of b.
pub(crate) fn partition_grid(p: &FactorialPoset) -> Vec<Vec<BTreeSet<usize>>> {
    let n = p.n();
    let dec = p.levels();
    let k = dec.downset_sizes.len();
    let mut bounds = dec.downset_sizes.clone();
    bounds.push(n);
    let mut grid = vec![vec![BTreeSet::new(); k]; k];
    for (i, level) in dec.levels.iter().enumerate() {
        for &x in level {
            let j = (0..k)
                .find(|&j| bounds[j] < x && x <= bounds[j + 1])
                .expect("the gaps cover 1..=n");
            grid[i][j].insert(x);
        }
    }
    grid
}

fn grid_position(grid: &[Vec<BTreeSet<usize>>], x: usize) -> (usize, usize) {
    for (r, row) in grid.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if cell.contains(&x) {
                return (r, c);
            }
        }
    }
    unreachable!("element {x} is in the grid");
}

/// Inverse of psi.  Splits the leftmost column that does not yet read,
/// bottom to top, as singletons in increasing order: the smallest entry of
/// that column moves into a fresh column, the following values climb after
/// it while each sits strictly above its predecessor, and a fresh row keeps
/// the grid square.  On exit every column reads as an increasing run of
/// singletons, which is exactly what the labelling pass of psi undoes.
pub fn phi(p: &FactorialPoset) -> BinaryMatrix {
    let n = p.n();
    let mut grid = partition_grid(p);
    loop {
        let cols = grid[0].len();
        let unfinished = |j: usize| {
            if grid.iter().any(|row| row[j].len() > 1) {
                return true;
            }
            let bottom_up: Vec<usize> = grid
                .iter()
                .rev()
                .filter_map(|row| row[j].iter().next().copied())
                .collect();
            bottom_up.windows(2).any(|w| w[0] > w[1])
        };
        let Some(c) = (0..cols).find(|&j| unfinished(j)) else {
            break;
        };
        let l = grid
            .iter()
            .filter_map(|row| row[c].iter().next())
            .min()
            .copied()
            .expect("a non-singleton column is nonempty");
        for row in grid.iter_mut() {
            row.insert(c, BTreeSet::new());
        }
        let (r, _) = grid_position(&grid, l);
        grid[r][c + 1].remove(&l);
        grid[r][c].insert(l);
        let mut prev_row = r;
        for follower in l + 1..=n {
            let (fr, fc) = grid_position(&grid, follower);
            if fr >= prev_row {
                break;
            }
            debug_assert_eq!(fc, c + 1, "climbing values come from the split column");
            grid[fr][fc].remove(&follower);
            grid[fr][fc - 1].insert(follower);
            prev_row = fr;
        }
        let cols = grid[0].len();
        grid.insert(c + 1, vec![BTreeSet::new(); cols]);
    }

    let dim = grid.len();
    let mut rows = vec![vec![0u8; dim]; dim];
    for (r, row) in grid.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if !cell.is_empty() {
                rows[r][c] = 1;
            }
        }
    }
    let m = BinaryMatrix::from_rows(&rows).expect("the grid is square and nonempty");
    debug_assert!(m.is_wmat());
    m
}

/// How to enumerate the posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetGenerationMode {
    /// Filter all downset-size vectors; practical for n <= 7.
    BruteForce,
    /// Map the matrix members through psi.
    PsiImage,
}

/// All weakly (3+1)-free factorial posets on 1..=n, ordered by downset
/// vector.
pub fn generate_posets(n: usize, mode: PosetGenerationMode) -> Result<Vec<FactorialPoset>> {
    if n == 0 {
        return Err(Error::invalid_input("length must be at least 1"));
    }
    match mode {
        PosetGenerationMode::BruteForce => {
            if n > 7 {
                return Err(Error::resource_limit(format!(
                    "brute-force poset enumeration is limited to n <= 7, got {n}"
                )));
            }
            let mut out = Vec::new();
            let mut d = vec![0usize; n];
            loop {
                if find_special_three_plus_one(&d).is_none() {
                    out.push(FactorialPoset {
                        downset_sizes: d.clone(),
                    });
                }
                // odometer over 0 <= d_j < j
                let mut pos = n;
                loop {
                    if pos == 0 {
                        return Ok(out);
                    }
                    pos -= 1;
                    if d[pos] < pos {
                        d[pos] += 1;
                        break;
                    }
                    d[pos] = 0;
                }
            }
        }
        PosetGenerationMode::PsiImage => {
            let mut out = matrices::generate_wmat(n)?
                .iter()
                .map(|m| psi(m).expect("generated matrices are members"))
                .collect::<Vec<_>>();
            out.sort();
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::omega_inv;
    use crate::sequences;

    fn mat(rows: &[&str]) -> BinaryMatrix {
        rows.join("\n").parse().unwrap()
    }

    fn poset(d: &[usize]) -> FactorialPoset {
        FactorialPoset::new(d.to_vec()).unwrap()
    }

    fn example_a() -> BinaryMatrix {
        mat(&["110100", "001110", "001000", "000000", "000000", "000001"])
    }

    fn figure_poset() -> FactorialPoset {
        poset(&[0, 0, 2, 1, 1, 0, 1, 7])
    }

    #[test]
    fn construction_checks_bounds_and_freeness() {
        assert!(FactorialPoset::new(vec![0, 1, 2]).is_ok());
        assert!(matches!(
            FactorialPoset::new(vec![1, 0]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FactorialPoset::new(vec![]),
            Err(Error::InvalidInput(_))
        ));
        let err = FactorialPoset::new(vec![0, 1, 0, 2]).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("(1, 2, 3, 4)"), "{msg}"),
            other => panic!("expected a domain error, got {other:?}"),
        }
    }

    #[test]
    fn the_unique_special_vector_on_four_elements() {
        let mut rejected = Vec::new();
        for d2 in 0..2 {
            for d3 in 0..3 {
                for d4 in 0..4 {
                    let d = vec![0, d2, d3, d4];
                    if find_special_three_plus_one(&d).is_some() {
                        rejected.push(d);
                    }
                }
            }
        }
        assert_eq!(rejected, vec![vec![0, 1, 0, 2]]);
    }

    #[test]
    fn relations_of_the_figure_poset() {
        let p = figure_poset();
        assert!(p.less(1, 3) && p.less(2, 3) && p.less(1, 4));
        assert!(!p.less(2, 4) && !p.less(3, 4) && !p.less(6, 7));
        assert!((1..=7).all(|i| p.less(i, 8)));
        assert_eq!(p.minimal_elements(), vec![1, 2, 6]);
        assert_eq!(p.maximal_elements(), vec![8]);
    }

    #[test]
    fn from_relations_round_trip() {
        let pairs = [
            (1, 3), (1, 4), (1, 5), (1, 7), (1, 8), (2, 3), (2, 8),
            (3, 8), (4, 8), (5, 8), (6, 8), (7, 8),
        ];
        assert_eq!(FactorialPoset::from_relations(8, &pairs).unwrap(), figure_poset());
        assert_eq!(
            FactorialPoset::from_relations(3, &[]).unwrap(),
            poset(&[0, 0, 0])
        );
    }

    #[test]
    fn from_relations_rejections() {
        assert!(matches!(
            FactorialPoset::from_relations(2, &[(1, 2), (2, 1)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FactorialPoset::from_relations(3, &[(1, 2), (2, 3)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FactorialPoset::from_relations(2, &[(2, 1)]),
            Err(Error::Domain(_))
        ));
        // 2 <_P 3 forces 1 <_P 3
        assert!(matches!(
            FactorialPoset::from_relations(3, &[(2, 3)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            FactorialPoset::from_relations(3, &[(0, 2)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn levels_of_small_posets() {
        let chain = poset(&[0, 1, 2]);
        let dec = chain.levels();
        assert_eq!(dec.downset_sizes, vec![0, 1, 2]);
        assert_eq!(dec.levels, vec![vec![1], vec![2], vec![3]]);

        let dec = figure_poset().levels();
        assert_eq!(dec.downset_sizes, vec![0, 1, 2, 7]);
        assert_eq!(
            dec.levels,
            vec![vec![1, 2, 6], vec![4, 5, 7], vec![3], vec![8]]
        );
    }

    #[test]
    fn psi_on_worked_example() {
        assert_eq!(psi(&example_a()).unwrap(), figure_poset());
    }

    #[test]
    fn psi_small_cases() {
        assert_eq!(psi(&mat(&["10", "01"])).unwrap(), poset(&[0, 1]));
        assert_eq!(psi(&mat(&["11", "00"])).unwrap(), poset(&[0, 0]));
        assert!(matches!(psi(&mat(&["10", "00"])), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_on_worked_example() {
        assert_eq!(phi(&figure_poset()), example_a());
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(phi(&poset(&[0, 0])), mat(&["11", "00"]));
        assert_eq!(phi(&poset(&[0, 1])), mat(&["10", "01"]));
        assert_eq!(phi(&poset(&[0])), BinaryMatrix::unit());
    }

    #[test]
    fn phi_and_psi_are_inverse() {
        for n in 1..=6 {
            for x in sequences::generate(n).unwrap() {
                let m = omega_inv(&x);
                let p = psi(&m).unwrap();
                assert_eq!(phi(&p), m, "{x}");
            }
            for p in generate_posets(n, PosetGenerationMode::BruteForce).unwrap() {
                assert_eq!(psi(&phi(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn generation_modes_agree() {
        let expected = [1usize, 2, 6, 23, 106, 567];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let brute = generate_posets(n, PosetGenerationMode::BruteForce).unwrap();
            let image = generate_posets(n, PosetGenerationMode::PsiImage).unwrap();
            assert_eq!(brute.len(), count, "n = {n}");
            assert_eq!(brute, image, "n = {n}");
        }
        assert!(matches!(
            generate_posets(8, PosetGenerationMode::BruteForce),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn grid_columns_respect_element_order() {
        for n in 1..=5 {
            for p in generate_posets(n, PosetGenerationMode::BruteForce).unwrap() {
                let grid = partition_grid(&p);
                let column = |x: usize| grid_position(&grid, x).1;
                for a in 1..=n {
                    for b in a + 1..=n {
                        assert!(column(a) <= column(b), "{p}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = figure_poset();
        assert_eq!(
            p.to_json(),
            "{\"n\":8,\"downset_sizes\":[0,0,2,1,1,0,1,7]}"
        );
        assert_eq!(FactorialPoset::from_json(&p.to_json()).unwrap(), p);
        let from_rel = FactorialPoset::from_json(
            "{\"n\":3,\"relations\":[[1,2],[1,3],[2,3]]}",
        )
        .unwrap();
        assert_eq!(from_rel, poset(&[0, 1, 2]));
        assert!(FactorialPoset::from_json("{\"n\":2}").is_err());
        assert!(FactorialPoset::from_json("{\"downset_sizes\":[0]}").is_err());
    }
}
