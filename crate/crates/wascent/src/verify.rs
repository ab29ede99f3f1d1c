//! Runtime property suites.
//!
//! Each suite replays a slice of the library's invariants up to a chosen
//! length and reports one `Check` per property, so the results can be
//! printed or inspected programmatically.

use crate::enumeration;
use crate::error::{Error, Result};
use crate::inversions;
use crate::matrices;
use crate::permutations;
use crate::posets;
use crate::sequences;

/// The counting sequence for lengths 1, 2, 3, ...
pub const KNOWN_COUNTS: [u64; 8] = [1, 2, 6, 23, 106, 567, 3440, 23286];

/// The Fishburn numbers, counting the strict subfamily.
pub const FISHBURN_COUNTS: [u64; 8] = [1, 2, 5, 15, 53, 217, 1014, 5335];

/// Outcome of one verified property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijections,
    Statistics,
    Mergeable,
    Conjecture,
}

impl Suite {
    pub fn all() -> [Suite; 4] {
        [
            Suite::Bijections,
            Suite::Statistics,
            Suite::Mergeable,
            Suite::Conjecture,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Statistics => "statistics",
            Suite::Mergeable => "mergeable",
            Suite::Conjecture => "conjecture",
        }
    }
}

fn check<F>(name: &str, body: F) -> Check
where
    F: FnOnce() -> std::result::Result<String, String>,
{
    match body() {
        Ok(detail) => Check {
            name: name.to_string(),
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name: name.to_string(),
            passed: false,
            detail,
        },
    }
}

fn err_string(e: Error) -> String {
    e.to_string()
}

/// Runs one suite for all lengths up to max_n.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<Vec<Check>> {
    if max_n == 0 {
        return Err(Error::invalid_input("max_n must be at least 1"));
    }
    Ok(match suite {
        Suite::Bijections => bijection_checks(max_n),
        Suite::Statistics => statistic_checks(max_n),
        Suite::Mergeable => mergeable_checks(max_n),
        Suite::Conjecture => conjecture_checks(max_n),
    })
}

/// Runs several suites back to back.
pub fn run_suites(suites: &[Suite], max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &suite in suites {
        out.extend(run_suite(suite, max_n)?);
    }
    Ok(out)
}

fn bijection_checks(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check("family counts agree", || {
        let mut seen = Vec::new();
        for n in 1..=max_n {
            let counts = enumeration::count_all(n).map_err(err_string)?;
            if !counts.all_equal() {
                return Err(format!("families disagree at n = {n}: {counts:?}"));
            }
            if n <= KNOWN_COUNTS.len() && counts.sequences != KNOWN_COUNTS[n - 1] {
                return Err(format!(
                    "expected {} objects at n = {n}, found {}",
                    KNOWN_COUNTS[n - 1],
                    counts.sequences
                ));
            }
            seen.push(counts.sequences);
        }
        Ok(format!("counts {seen:?}"))
    }));

    checks.push(check("gamma round trip", || {
        for n in 1..=max_n {
            for x in sequences::generate(n).map_err(err_string)? {
                let p = permutations::gamma_inv(&x);
                let back = permutations::gamma(&p).map_err(err_string)?;
                if back != x {
                    return Err(format!("{x} came back as {back}"));
                }
                let sites = permutations::active_sites(&p).map_err(err_string)?;
                if sites.count() != 2 + x.wasc_count() {
                    return Err(format!("{p} has {} active sites", sites.count()));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("omega round trip", || {
        for n in 1..=max_n {
            for x in sequences::generate(n).map_err(err_string)? {
                let m = matrices::omega_inv(&x);
                if !m.is_wmat() {
                    return Err(format!("image of {x} is not a member"));
                }
                if m.dim() != x.wasc_count() + 1 {
                    return Err(format!("image of {x} has dimension {}", m.dim()));
                }
                let back = matrices::omega(&m).map_err(err_string)?;
                if back != x {
                    return Err(format!("{x} came back as {back}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("psi and phi are inverse", || {
        for n in 1..=max_n {
            for x in sequences::generate(n).map_err(err_string)? {
                let m = matrices::omega_inv(&x);
                let p = posets::psi(&m).map_err(err_string)?;
                if posets::phi(&p) != m {
                    return Err(format!("phi of psi moved the image of {x}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("inversion encoding round trip", || {
        for n in 1..=max_n {
            let avoiders =
                inversions::generate_avoiding(n, &[inversions::pattern_100()]).map_err(err_string)?;
            for e in &avoiders {
                let w = inversions::phi_map(e).map_err(err_string)?;
                if inversions::phi_map_inverse(&w) != *e {
                    return Err(format!("{e} did not come back"));
                }
            }
            let total = sequences::generate(n).map_err(err_string)?.len();
            if avoiders.len() != total {
                return Err(format!(
                    "{} avoiders against {total} sequences at n = {n}",
                    avoiders.len()
                ));
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("recurrence and series match generation", || {
        let table = enumeration::a_table(max_n);
        let series = enumeration::series_coefficients(max_n).map_err(err_string)?;
        for n in 1..=max_n {
            let count = sequences::generate(n).map_err(err_string)?.len();
            if table.row_sum(n) != count.into() {
                return Err(format!("row sum at n = {n} is {}", table.row_sum(n)));
            }
            if series[n] != count.into() {
                return Err(format!("series coefficient at n = {n} is {}", series[n]));
            }
            let hist = enumeration::wasc_histogram(n).map_err(err_string)?;
            for k in 1..=n {
                if *table.get(n, k) != hist[k - 1].into() {
                    return Err(format!("a({n}, {k}) disagrees with the histogram"));
                }
            }
        }
        Ok(format!("orders through {max_n}"))
    }));

    checks
}

fn statistic_checks(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check("matrix statistics transport", || {
        for n in 1..=max_n {
            for x in sequences::generate(n).map_err(err_string)? {
                let stats = x.stats();
                let m = matrices::omega_inv(&x);
                let mstats = m.stats();
                if mstats.dimension != stats.wasc_count + 1
                    || mstats.top_row_sum != stats.zero_count
                    || mstats.rightmost_column_sum != stats.final_descent_run
                    || mstats.topone != stats.last_entry + 1
                {
                    return Err(format!("statistics moved for {x}: {mstats:?}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("poset statistics transport", || {
        for n in 1..=max_n {
            for x in sequences::generate(n).map_err(err_string)? {
                let m = matrices::omega_inv(&x);
                let mstats = m.stats();
                let p = posets::psi(&m).map_err(err_string)?;
                // Maximal elements are the ones weakly right of the
                // bottommost nonzero row.
                let dim = m.dim();
                let bottom = (1..=dim)
                    .rev()
                    .find(|&r| (r..=dim).any(|c| m.get(r, c)))
                    .expect("a member matrix has a one");
                let weakly_right = (bottom..=dim)
                    .map(|c| (1..=c).filter(|&r| m.get(r, c)).count())
                    .sum::<usize>();
                if p.minimal_elements().len() != mstats.top_row_sum
                    || p.maximal_elements().len() != weakly_right
                    || p.levels().levels.len() != mstats.nonzero_rows
                {
                    return Err(format!("statistics moved for {x}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("descent positions survive the encoding", || {
        for n in 1..=max_n {
            let avoiders =
                inversions::generate_avoiding(n, &[inversions::pattern_100()]).map_err(err_string)?;
            for e in avoiders {
                let w = inversions::phi_map(&e).map_err(err_string)?;
                let v = w.entries();
                let w_descents: std::collections::BTreeSet<usize> = (1..v.len())
                    .filter(|&i| v[i - 1] > v[i])
                    .map(|i| i + 1)
                    .collect();
                if w_descents != e.descent_positions() {
                    return Err(format!("descents moved for {e}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("weakly increasing sequences follow Catalan", || {
        for n in 1..=max_n {
            let count = sequences::generate(n)
                .map_err(err_string)?
                .iter()
                .filter(|x| x.stats().is_weakly_increasing)
                .count();
            let expected = enumeration::catalan(n);
            if expected != count.into() {
                return Err(format!("{count} weakly increasing at n = {n}"));
            }
            let table = enumeration::a_table(n);
            if *table.get(n, n) != expected {
                return Err(format!("a({n}, {n}) is not Catalan"));
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks
}

fn mergeable_checks(max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check("mergeable members are the strict images", || {
        for n in 1..=max_n {
            for m in matrices::generate_wmat(n).map_err(err_string)? {
                let x = matrices::omega(&m).map_err(err_string)?;
                if m.is_mergeable() != x.stats().is_ascent_sequence {
                    return Err(format!("merge verdict disagrees for {x}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks.push(check("mergeable counts follow the Fishburn numbers", || {
        let mut seen = Vec::new();
        for n in 1..=max_n.min(FISHBURN_COUNTS.len()) {
            let count = matrices::generate_wmat(n)
                .map_err(err_string)?
                .iter()
                .filter(|m| m.is_mergeable())
                .count() as u64;
            if count != FISHBURN_COUNTS[n - 1] {
                return Err(format!(
                    "expected {} mergeable members at n = {n}, found {count}",
                    FISHBURN_COUNTS[n - 1]
                ));
            }
            seen.push(count);
        }
        Ok(format!("counts {seen:?}"))
    }));

    checks.push(check("weak entries count the plateaus", || {
        for n in 1..=max_n {
            for m in matrices::generate_wmat(n).map_err(err_string)? {
                let x = matrices::omega(&m).map_err(err_string)?;
                if m.weak_entries().len() != x.stats().plateau_positions.len() {
                    return Err(format!("weak entry count disagrees for {x}"));
                }
            }
        }
        Ok(format!("all lengths through {max_n}"))
    }));

    checks
}

fn conjecture_checks(max_n: usize) -> Vec<Check> {
    vec![check("bounded descents match the quadruple avoiders", || {
        let mut seen = Vec::new();
        for n in 1..=max_n {
            let result = enumeration::conjecture_check(n).map_err(err_string)?;
            if !result.agrees() {
                return Err(format!(
                    "counts split at n = {n}: {} against {}",
                    result.bounded_descent_count, result.avoider_count
                ));
            }
            seen.push(result.bounded_descent_count);
        }
        Ok(format!("counts {seen:?}"))
    })]
}
