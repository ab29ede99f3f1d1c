//! The counting recurrence, the truncated series, and the Catalan diagonal.
//!
//! Prints the triangle a(n, k), checks its row sums against brute-force
//! generation and against the generating-function coefficients, and shows
//! the all-family count record at one length.

use num_bigint::BigInt;

use wascent::enumeration::{a_table, catalan, count_all, series_coefficients};
use wascent::sequences::generate;

fn main() -> wascent::Result<()> {
    let max_n = 8;
    let table = a_table(max_n);
    println!("a(n, k) for n <= {max_n} (row sums count the sequences):");
    for n in 0..=max_n {
        let cells: Vec<String> = table.row(n).iter().map(BigInt::to_string).collect();
        println!("    n={n:<2} {}  | {}", cells.join(" "), table.row_sum(n));
    }

    let series = series_coefficients(max_n + 1)?;
    for n in 1..=max_n {
        assert_eq!(table.row_sum(n), series[n]);
        assert_eq!(series[n], BigInt::from(generate(n)?.len()));
    }
    println!("row sums, series coefficients, and generation agree through n = {max_n}");

    println!("\ndiagonal a(n, n) against the Catalan numbers:");
    for n in 1..=max_n {
        assert_eq!(*table.get(n, n), catalan(n));
        println!("    a({n}, {n}) = {}", catalan(n));
    }

    let counts = count_all(5)?;
    println!("\nall seven families at n = 5:");
    for (name, value) in counts.rows() {
        println!("    {name:<32} {value}");
    }
    assert!(counts.all_equal());
    Ok(())
}
