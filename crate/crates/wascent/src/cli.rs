//! Command line interface.
//!
//! Exit codes: 0 success, 1 internal failure, 2 usage error, 3 invalid or
//! out-of-domain object, 4 cutoff exceeded, 5 a verified property failed.
//! The environment variable WASC_MAX_N moves the length cutoff (default
//! 10) for `generate`, `count`, `map` and `verify`.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumeration;
use crate::error::{Error, Result};
use crate::inversions::{self, InversionSequence};
use crate::matrices::{self, BinaryMatrix};
use crate::permutations::{self, GenerationMode, Permutation};
use crate::posets::{self, FactorialPoset, PosetGenerationMode};
use crate::sequences::{self, WeakAscentSequence};
use crate::verify::{self, Suite};

/// Length cutoff used when WASC_MAX_N is unset.
pub const DEFAULT_MAX_N: usize = 10;

#[derive(Parser)]
#[command(
    name = "wascent",
    version,
    about = "Weak ascent sequences and the structures they encode"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    /// Weak ascent sequences
    Seq,
    /// Weak Fishburn permutations
    Perm,
    /// Upper triangular binary matrix members
    Matrix,
    /// Weakly (3+1)-free factorial posets
    Poset,
    /// Inversion sequences avoiding (10)0
    Inv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One JSON object per line
    Jsonl,
    /// Plain text; matrices print as 0/1 rows separated by blank lines
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Bijections,
    #[value(name = "stats", alias = "statistics")]
    Statistics,
    Mergeable,
    Conjecture,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::all().to_vec(),
            SuiteArg::Bijections => vec![Suite::Bijections],
            SuiteArg::Statistics => vec![Suite::Statistics],
            SuiteArg::Mergeable => vec![Suite::Mergeable],
            SuiteArg::Conjecture => vec![Suite::Conjecture],
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every object of one family at a given length
    Generate {
        #[arg(long, value_enum)]
        object: ObjectKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        /// Comma-separated vincular patterns for --object inv, e.g. "(10)0,100"
        #[arg(long)]
        patterns: Option<String>,
    },
    /// Tally all seven families at a given length; unequal tallies exit 5
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Convert objects read from stdin between families
    Map {
        #[arg(long, value_enum)]
        from: ObjectKind,
        #[arg(long, value_enum)]
        to: ObjectKind,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Re-run the property suites; any failed check exits 5
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Print the counting triangle a(n, k) as tab-separated rows
    Table {
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Print coefficients of the truncated generating function at u = 1
    Series {
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Print the counting sequence in OEIS b-file form
    Bfile {
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Domain(_) => 3,
        Error::ResourceLimit(_) => 4,
        Error::Internal(_) => 1,
    }
}

fn length_limit() -> Result<usize> {
    match std::env::var("WASC_MAX_N") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            Error::invalid_input(format!("WASC_MAX_N must be a nonnegative integer, got {raw:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(e) => Err(Error::invalid_input(format!("WASC_MAX_N: {e}"))),
    }
}

fn ensure_within(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::resource_limit(format!(
            "{what} {n} exceeds the cutoff {limit}; raise WASC_MAX_N to allow it"
        )));
    }
    Ok(())
}

/// Parses the arguments and executes one subcommand against the given
/// streams, returning the process exit code.
pub fn run(
    args: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let limit = length_limit()?;
    match command {
        Command::Generate {
            object,
            n,
            format,
            patterns,
        } => {
            ensure_within(n, limit, "length")?;
            for obj in generate_objects(object, n, limit, patterns.as_deref())? {
                write_object(&obj, format, stdout)?;
            }
            Ok(0)
        }
        Command::Count { n } => {
            ensure_within(n, limit, "length")?;
            let counts = enumeration::count_all(n)?;
            for (name, value) in counts.rows() {
                writeln!(stdout, "{name}\t{value}")?;
            }
            if counts.all_equal() {
                Ok(0)
            } else {
                writeln!(stderr, "error: the families disagree at n = {n}")?;
                Ok(5)
            }
        }
        Command::Map { from, to, format } => {
            for obj in read_objects(from, format, stdin)? {
                ensure_within(obj.size(), limit, "object length")?;
                let x = to_sequence(obj)?;
                write_object(&from_sequence(&x, to)?, format, stdout)?;
            }
            Ok(0)
        }
        Command::Verify { suite, max_n } => {
            ensure_within(max_n, limit, "max_n")?;
            let checks = verify::run_suites(&suite.suites(), max_n)?;
            let mut failed = 0usize;
            for c in &checks {
                let mark = if c.passed { "ok" } else { "FAIL" };
                writeln!(stdout, "{mark} {}: {}", c.name, c.detail)?;
                if !c.passed {
                    failed += 1;
                }
            }
            writeln!(
                stdout,
                "passed {} of {} checks (max n {max_n})",
                checks.len() - failed,
                checks.len()
            )?;
            Ok(if failed == 0 { 0 } else { 5 })
        }
        Command::Table { n } => {
            let table = enumeration::a_table(n);
            for row in 0..=n {
                let cells: Vec<String> = (0..=row)
                    .map(|k| table.get(row, k).to_string())
                    .collect();
                writeln!(stdout, "{}", cells.join("\t"))?;
            }
            Ok(0)
        }
        Command::Series { terms } => {
            for (m, value) in enumeration::series_coefficients(terms)?.iter().enumerate() {
                writeln!(stdout, "{m}\t{value}")?;
            }
            Ok(0)
        }
        Command::Bfile { n } => {
            let table = enumeration::a_table(n);
            for m in 0..=n {
                writeln!(stdout, "{m} {}", table.row_sum(m))?;
            }
            Ok(0)
        }
    }
}

enum Object {
    Seq(WeakAscentSequence),
    Perm(Permutation),
    Matrix(BinaryMatrix),
    Poset(FactorialPoset),
    Inv(InversionSequence),
}

impl Object {
    /// The length n of the encoded sequence.
    fn size(&self) -> usize {
        match self {
            Object::Seq(x) => x.len(),
            Object::Perm(p) => p.len(),
            Object::Matrix(m) => m.ones(),
            Object::Poset(p) => p.n(),
            Object::Inv(e) => e.len(),
        }
    }
}

fn generate_objects(
    kind: ObjectKind,
    n: usize,
    limit: usize,
    patterns: Option<&str>,
) -> Result<Vec<Object>> {
    if patterns.is_some() && kind != ObjectKind::Inv {
        return Err(Error::invalid_input(
            "--patterns only applies to --object inv",
        ));
    }
    Ok(match kind {
        ObjectKind::Seq => sequences::generate(n)?
            .into_iter()
            .map(Object::Seq)
            .collect(),
        ObjectKind::Perm => {
            permutations::generate_weak_fishburn_with_cutoff(n, GenerationMode::Insertion, limit)?
                .into_iter()
                .map(Object::Perm)
                .collect()
        }
        ObjectKind::Matrix => matrices::generate_wmat(n)?
            .into_iter()
            .map(Object::Matrix)
            .collect(),
        ObjectKind::Poset => {
            let mode = if n <= 7 {
                PosetGenerationMode::BruteForce
            } else {
                PosetGenerationMode::PsiImage
            };
            posets::generate_posets(n, mode)?
                .into_iter()
                .map(Object::Poset)
                .collect()
        }
        ObjectKind::Inv => {
            let parsed: Vec<inversions::VincularPattern> = match patterns {
                Some(list) => list
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<_>>()?,
                None => vec![inversions::pattern_100()],
            };
            inversions::generate_avoiding(n, &parsed)?
                .into_iter()
                .map(Object::Inv)
                .collect()
        }
    })
}

fn to_sequence(obj: Object) -> Result<WeakAscentSequence> {
    match obj {
        Object::Seq(x) => Ok(x),
        Object::Perm(p) => permutations::gamma(&p),
        Object::Matrix(m) => matrices::omega(&m),
        Object::Poset(p) => matrices::omega(&posets::phi(&p)),
        Object::Inv(e) => inversions::phi_map(&e),
    }
}

fn from_sequence(x: &WeakAscentSequence, to: ObjectKind) -> Result<Object> {
    Ok(match to {
        ObjectKind::Seq => Object::Seq(x.clone()),
        ObjectKind::Perm => Object::Perm(permutations::gamma_inv(x)),
        ObjectKind::Matrix => Object::Matrix(matrices::omega_inv(x)),
        ObjectKind::Poset => Object::Poset(posets::psi(&matrices::omega_inv(x))?),
        ObjectKind::Inv => Object::Inv(inversions::phi_map_inverse(x)),
    })
}

fn write_object(obj: &Object, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Jsonl => {
            let json = match obj {
                Object::Seq(x) => x.to_json(),
                Object::Perm(p) => p.to_json(),
                Object::Matrix(m) => m.to_json(),
                Object::Poset(p) => p.to_json(),
                Object::Inv(e) => e.to_json(),
            };
            writeln!(out, "{json}")?;
        }
        Format::Text => match obj {
            Object::Seq(x) => writeln!(out, "{x}")?,
            Object::Perm(p) => writeln!(out, "{p}")?,
            Object::Matrix(m) => writeln!(out, "{m}\n")?,
            Object::Poset(p) => writeln!(out, "{p}")?,
            Object::Inv(e) => writeln!(out, "{e}")?,
        },
    }
    Ok(())
}

fn to_unsigned(values: &[i64]) -> Result<Vec<usize>> {
    values
        .iter()
        .map(|&v| {
            if v < 0 {
                Err(Error::invalid_input(format!("negative entry {v}")))
            } else {
                Ok(v as usize)
            }
        })
        .collect()
}

fn parse_numbers(line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|token| {
            token
                .parse::<i64>()
                .map_err(|_| Error::invalid_input(format!("not an integer: {token:?}")))
        })
        .collect()
}

fn parse_object(kind: ObjectKind, format: Format, record: &str) -> Result<Object> {
    match format {
        Format::Jsonl => Ok(match kind {
            ObjectKind::Seq => Object::Seq(WeakAscentSequence::from_json(record)?),
            ObjectKind::Perm => Object::Perm(Permutation::from_json(record)?),
            ObjectKind::Matrix => Object::Matrix(BinaryMatrix::from_json(record)?),
            ObjectKind::Poset => Object::Poset(FactorialPoset::from_json(record)?),
            ObjectKind::Inv => Object::Inv(InversionSequence::from_json(record)?),
        }),
        Format::Text => Ok(match kind {
            ObjectKind::Seq => Object::Seq(WeakAscentSequence::from_signed(&parse_numbers(record)?)?),
            ObjectKind::Perm => Object::Perm(Permutation::from_signed(&parse_numbers(record)?)?),
            ObjectKind::Matrix => Object::Matrix(record.parse()?),
            ObjectKind::Poset => {
                Object::Poset(FactorialPoset::new(to_unsigned(&parse_numbers(record)?)?)?)
            }
            ObjectKind::Inv => {
                Object::Inv(InversionSequence::from_signed(&parse_numbers(record)?)?)
            }
        }),
    }
}

/// Splits the input into one record per object: lines for most kinds,
/// blank-line separated blocks for matrices in text form.
fn read_objects(kind: ObjectKind, format: Format, stdin: &mut dyn BufRead) -> Result<Vec<Object>> {
    let lines: Vec<String> = stdin.lines().collect::<std::io::Result<_>>()?;
    let mut records: Vec<String> = Vec::new();
    if format == Format::Text && kind == ObjectKind::Matrix {
        let mut block: Vec<&str> = Vec::new();
        for line in lines.iter().chain(std::iter::once(&String::new())) {
            if line.trim().is_empty() {
                if !block.is_empty() {
                    records.push(block.join("\n"));
                    block.clear();
                }
            } else {
                block.push(line);
            }
        }
    } else {
        records = lines
            .into_iter()
            .filter(|l| !l.trim().is_empty())
            .collect();
    }
    records
        .iter()
        .map(|record| parse_object(kind, format, record))
        .collect()
}
