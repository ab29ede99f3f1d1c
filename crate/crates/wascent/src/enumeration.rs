//! Counting weak ascent sequences.
//!
//! The table a(n, k) counts length-n sequences whose matrix image has
//! dimension k, so that row sums give the counting sequence and the
//! diagonal a(n, n) gives the Catalan numbers.  It satisfies a(0, 0) = 1
//! and
//!
//!   a(n, k) = sum over 0 <= i <= n, 0 <= j < k of
//!             (-1)^j C(k - j, i) C(i, j) a(n - i, k - j - 1).
//!
//! The generating function G(u, z) = sum of g_m(u) z^m obeys the kernel
//! equation G(u, z) (1 - u) = u - u G(u + (u - u^2) z, z) + u G(u, z),
//! which determines each g_m from g_0, ..., g_{m-1} by exact division by
//! 1 - u.  Truncating at order 12 is enough for the tables shipped here;
//! the solver takes any order.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::inversions::{self, VincularPattern};
use crate::matrices;
use crate::permutations::{self, GenerationMode, DEFAULT_PERMUTATION_CUTOFF};
use crate::posets::{self, PosetGenerationMode};
use crate::sequences;

fn binomial_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::zero(); max + 1]; max + 1];
    for n in 0..=max {
        c[n][0] = BigInt::one();
        for k in 1..=n {
            c[n][k] = &c[n - 1][k - 1] + &c[n - 1][k];
        }
    }
    c
}

/// The triangle a(n, k) for 0 <= k <= n <= max_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    values: Vec<Vec<BigInt>>,
}

impl CountTable {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.values[n][k]
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.values[n]
    }

    /// The number of weak ascent sequences of length n.
    pub fn row_sum(&self, n: usize) -> BigInt {
        self.values[n].iter().sum()
    }
}

/// Fills the triangle by the two-index recurrence.
pub fn a_table(max_n: usize) -> CountTable {
    let c = binomial_table(max_n);
    let mut a = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
    a[0][0] = BigInt::one();
    for k in 1..=max_n {
        for n in 1..=max_n {
            let mut acc = BigInt::zero();
            for i in 0..=n {
                for j in 0..k {
                    if i > k - j || j > i {
                        continue;
                    }
                    let mut term = &c[k - j][i] * &c[i][j];
                    term *= &a[n - i][k - j - 1];
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            a[n][k] = acc;
        }
    }
    CountTable { values: a }
}

/// Histogram of the weak ascent statistic: entry k counts the length-n
/// sequences with exactly k weak ascents.
pub fn wasc_histogram(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n];
    for x in sequences::generate(n)? {
        hist[x.wasc_count()] += 1;
    }
    Ok(hist)
}

pub fn catalan(n: usize) -> BigInt {
    let mut cat = vec![BigInt::one()];
    for m in 1..=n {
        let next = (0..m).map(|i| &cat[i] * &cat[m - 1 - i]).sum();
        cat.push(next);
    }
    cat.pop().expect("the vector is nonempty")
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<BigInt>);

impl Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }

    fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    fn u() -> Self {
        Poly(vec![BigInt::zero(), BigInt::one()])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    fn add_assign(&mut self, other: &Poly) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigInt::zero());
        }
        for (i, v) in other.0.iter().enumerate() {
            self.0[i] += v;
        }
        self.trim();
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    /// Multiplication by u.
    fn shift_up(mut self) -> Poly {
        if !self.0.is_empty() {
            self.0.insert(0, BigInt::zero());
        }
        self
    }

    fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Exact division; the kernel equation guarantees divisibility.
    fn divide_by_one_minus_u(self) -> Result<Poly> {
        if !self.eval_one().is_zero() {
            return Err(Error::internal("the numerator is not divisible by 1 - u"));
        }
        if self.0.len() <= 1 {
            return Ok(Poly::zero());
        }
        let mut q = vec![BigInt::zero(); self.0.len() - 1];
        q[0] = self.0[0].clone();
        for i in 1..q.len() {
            q[i] = &self.0[i] + &q[i - 1];
        }
        let mut p = Poly(q);
        p.trim();
        Ok(p)
    }
}

/// The polynomials g_0, ..., g_terms with G(u, z) = sum of g_m(u) z^m,
/// returned as their values at u = 1: the counting sequence.
pub fn series_coefficients(terms: usize) -> Result<Vec<BigInt>> {
    Ok(series_polynomials(terms)?
        .iter()
        .map(Poly::eval_one)
        .collect())
}

fn series_polynomials(terms: usize) -> Result<Vec<Poly>> {
    let c = binomial_table(terms + 2);
    let u_minus_u2 = Poly(vec![BigInt::zero(), BigInt::one(), -BigInt::one()]);
    let mut power = vec![Poly::one()];
    for s in 1..=terms {
        let next = power[s - 1].mul(&u_minus_u2);
        power.push(next);
    }
    let mut g = vec![Poly::u()];
    for m in 1..=terms {
        let mut acc = Poly::zero();
        for (r, gr) in g.iter().enumerate() {
            let s = m - r;
            // [z^s] of g_r at u + (u - u^2) z
            let mut part = Poly::zero();
            for d in s..gr.0.len() {
                if gr.0[d].is_zero() {
                    continue;
                }
                let mut mono = vec![BigInt::zero(); d - s + 1];
                mono[d - s] = &gr.0[d] * &c[d][s];
                part.add_assign(&Poly(mono));
            }
            acc.add_assign(&part.mul(&power[s]));
        }
        g.push(acc.shift_up().divide_by_one_minus_u()?);
    }
    Ok(g)
}

/// Compares the sequences with every descent bounded by one against the
/// inversion sequences avoiding 100, 110, 120 and 210 classically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub n: usize,
    pub bounded_descent_count: u64,
    pub avoider_count: u64,
}

impl ConjectureCheck {
    pub fn agrees(&self) -> bool {
        self.bounded_descent_count == self.avoider_count
    }
}

pub fn conjecture_check(n: usize) -> Result<ConjectureCheck> {
    let bounded = sequences::generate(n)?
        .iter()
        .filter(|x| x.stats().is_bounded_descent)
        .count() as u64;
    let patterns: Vec<VincularPattern> = [
        vec![1, 0, 0],
        vec![1, 1, 0],
        vec![1, 2, 0],
        vec![2, 1, 0],
    ]
    .into_iter()
    .map(|letters| VincularPattern::classical(letters).expect("the literals are well formed"))
    .collect();
    let avoiders = inversions::generate_avoiding(n, &patterns)?.len() as u64;
    Ok(ConjectureCheck {
        n,
        bounded_descent_count: bounded,
        avoider_count: avoiders,
    })
}

/// Sizes of all seven families at length n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCounts {
    pub n: usize,
    pub sequences: u64,
    pub permutations: u64,
    pub matrices: u64,
    pub posets: u64,
    pub avoiders_100: u64,
    pub avoiders_101: u64,
    pub posdt: u64,
}

impl FamilyCounts {
    pub fn all_equal(&self) -> bool {
        let v = self.sequences;
        [
            self.permutations,
            self.matrices,
            self.posets,
            self.avoiders_100,
            self.avoiders_101,
            self.posdt,
        ]
        .iter()
        .all(|&c| c == v)
    }

    pub fn rows(&self) -> Vec<(&'static str, u64)> {
        vec![
            ("weak-ascent-sequences", self.sequences),
            ("weak-fishburn-permutations", self.permutations),
            ("binary-matrices", self.matrices),
            ("factorial-posets", self.posets),
            ("inversion-sequences-100", self.avoiders_100),
            ("inversion-sequences-101", self.avoiders_101),
            ("inversion-sequences-posdt", self.posdt),
        ]
    }
}

/// Counts each family by direct generation, falling back to the bijective
/// images where brute force is impractical.
pub fn count_all(n: usize) -> Result<FamilyCounts> {
    let sequences = sequences::generate(n)?.len() as u64;
    let perm_mode = if n <= DEFAULT_PERMUTATION_CUTOFF {
        GenerationMode::FilterAll
    } else {
        GenerationMode::Insertion
    };
    let permutations =
        permutations::generate_weak_fishburn_with_cutoff(n, perm_mode, n)?.len() as u64;
    let matrices = matrices::generate_wmat(n)?.len() as u64;
    let poset_mode = if n <= 7 {
        PosetGenerationMode::BruteForce
    } else {
        PosetGenerationMode::PsiImage
    };
    let posets = posets::generate_posets(n, poset_mode)?.len() as u64;
    let avoiders_100 =
        inversions::generate_avoiding(n, &[inversions::pattern_100()])?.len() as u64;
    let avoiders_101 =
        inversions::generate_avoiding(n, &[inversions::pattern_101()])?.len() as u64;
    let posdt = inversions::generate_posdt(n)?.len() as u64;
    Ok(FamilyCounts {
        n,
        sequences,
        permutations,
        matrices,
        posets,
        avoiders_100,
        avoiders_101,
        posdt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn table_boundary_and_small_values() {
        let t = a_table(6);
        assert_eq!(*t.get(0, 0), big(1));
        for n in 1..=6 {
            assert_eq!(*t.get(n, 0), big(0));
            assert_eq!(*t.get(0, n), big(0));
            for k in n + 1..=6 {
                assert_eq!(*t.get(n, k), big(0), "a({n}, {k})");
            }
        }
        assert_eq!(*t.get(1, 1), big(1));
        assert_eq!(*t.get(2, 2), big(2));
        assert_eq!(*t.get(3, 2), big(1));
        assert_eq!(*t.get(3, 3), big(5));
        assert_eq!(*t.get(4, 3), big(9));
        assert_eq!(*t.get(4, 4), big(14));
    }

    #[test]
    fn rows_match_the_weak_ascent_histogram() {
        let t = a_table(7);
        for n in 1..=7 {
            let hist = wasc_histogram(n).unwrap();
            for k in 1..=n {
                assert_eq!(*t.get(n, k), big(hist[k - 1] as i64), "a({n}, {k})");
            }
        }
    }

    #[test]
    fn row_sums_give_the_counting_sequence() {
        let t = a_table(8);
        let expected = [1i64, 1, 2, 6, 23, 106, 567, 3440, 23286];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(t.row_sum(n), big(v), "n = {n}");
        }
    }

    #[test]
    fn diagonal_is_catalan() {
        let t = a_table(10);
        for n in 0..=10 {
            assert_eq!(*t.get(n, n), catalan(n), "n = {n}");
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(catalan(n), big(v));
        }
    }

    #[test]
    fn series_matches_the_recurrence() {
        let coeffs = series_coefficients(10).unwrap();
        let expected = [1i64, 1, 2, 6, 23, 106, 567, 3440, 23286];
        for (m, &v) in expected.iter().enumerate() {
            assert_eq!(coeffs[m], big(v), "m = {m}");
        }
        let t = a_table(10);
        for m in 0..=10 {
            assert_eq!(coeffs[m], t.row_sum(m), "m = {m}");
        }
    }

    #[test]
    fn series_polynomials_start_as_displayed() {
        let g = series_polynomials(3).unwrap();
        assert_eq!(g[0], Poly(vec![big(0), big(1)]));
        assert_eq!(g[1], Poly(vec![big(0), big(0), big(1)]));
        assert_eq!(g[2], Poly(vec![big(0), big(0), big(0), big(2)]));
        assert_eq!(g[3], Poly(vec![big(0), big(0), big(0), big(1), big(5)]));
    }

    #[test]
    fn exact_division_is_checked() {
        let p = Poly(vec![big(1), big(1)]);
        assert!(p.divide_by_one_minus_u().is_err());
        let p = Poly(vec![big(1), big(0), big(-1)]);
        assert_eq!(p.divide_by_one_minus_u().unwrap(), Poly(vec![big(1), big(1)]));
    }

    #[test]
    fn histogram_small_cases() {
        assert_eq!(wasc_histogram(1).unwrap(), vec![1]);
        assert_eq!(wasc_histogram(2).unwrap(), vec![0, 2]);
        assert_eq!(wasc_histogram(4).unwrap(), vec![0, 0, 9, 14]);
    }

    #[test]
    fn conjecture_agrees_on_small_lengths() {
        for n in 1..=6 {
            let check = conjecture_check(n).unwrap();
            assert!(check.agrees(), "n = {n}: {check:?}");
        }
        let check = conjecture_check(4).unwrap();
        assert_eq!(check.bounded_descent_count, 21);
        assert_eq!(check.avoider_count, 21);
    }

    #[test]
    fn all_families_agree_at_length_four() {
        let counts = count_all(4).unwrap();
        assert!(counts.all_equal(), "{counts:?}");
        assert_eq!(counts.sequences, 23);
        assert_eq!(counts.rows().len(), 7);
    }
}
