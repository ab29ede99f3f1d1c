//! How simple statistics move through the bijections.
//!
//! For the running example: the zeros of the sequence become the top row of
//! the matrix and the minimal elements of the poset; the weak ascent count
//! plus one is the matrix dimension; the final strictly decreasing run is
//! the rightmost column; the last entry plus one is the topone row.

use wascent::matrices::omega_inv;
use wascent::posets::psi;
use wascent::sequences::{generate, WeakAscentSequence};

fn main() -> wascent::Result<()> {
    let x = WeakAscentSequence::new(vec![0, 0, 2, 1, 1, 0, 1, 5])?;
    let stats = x.stats();
    let m = omega_inv(&x);
    let mstats = m.stats();
    let p = psi(&m)?;

    println!("sequence {x}");
    println!("    weak ascents        {}", stats.wasc_count);
    println!("    zeros               {}", stats.zero_count);
    println!("    final descent run   {}", stats.final_descent_run);
    println!("    last entry          {}", stats.last_entry);
    println!("matrix");
    println!("    dimension           {}", mstats.dimension);
    println!("    top row sum         {}", mstats.top_row_sum);
    println!("    rightmost column    {}", mstats.rightmost_column_sum);
    println!("    topone              {}", mstats.topone);
    println!("poset {p}");
    println!("    minimal elements    {}", p.minimal_elements().len());
    println!("    levels              {}", p.levels().levels.len());
    println!("    maximal elements    {}", p.maximal_elements().len());

    assert_eq!(mstats.dimension, stats.wasc_count + 1);
    assert_eq!(mstats.top_row_sum, stats.zero_count);
    assert_eq!(mstats.rightmost_column_sum, stats.final_descent_run);
    assert_eq!(mstats.topone, stats.last_entry + 1);
    assert_eq!(p.minimal_elements().len(), mstats.top_row_sum);
    assert_eq!(p.levels().levels.len(), mstats.nonzero_rows);

    // The same equalities on every object of length 6.
    for x in generate(6)? {
        let stats = x.stats();
        let m = omega_inv(&x);
        let mstats = m.stats();
        assert_eq!(mstats.dimension, stats.wasc_count + 1);
        assert_eq!(mstats.top_row_sum, stats.zero_count);
        assert_eq!(mstats.rightmost_column_sum, stats.final_descent_run);
        assert_eq!(mstats.topone, stats.last_entry + 1);
    }
    println!("\nall 567 objects of length 6 transport their statistics exactly");
    Ok(())
}
