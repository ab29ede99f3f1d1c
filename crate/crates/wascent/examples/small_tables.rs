//! Every weak ascent sequence and every matrix member through length 4.
//!
//! Reproduces the two small classification tables: 1, 2, 6, and 23 objects
//! at lengths 1 through 4, in both the sequence and the matrix family.

use wascent::matrices::generate_wmat;
use wascent::sequences::generate;

fn main() -> wascent::Result<()> {
    for n in 1..=4 {
        let seqs = generate(n)?;
        println!("WAsc_{n}, {} in total", seqs.len());
        let row: Vec<String> = seqs.iter().map(|x| format!("({x})")).collect();
        println!("    {}", row.join(" "));
    }

    for n in 1..=4 {
        let mats = generate_wmat(n)?;
        println!("\nWMat_{n}, {} in total (dimensions vary with the weak ascent count)", mats.len());
        for chunk in mats.chunks(8) {
            let blocks: Vec<Vec<String>> = chunk
                .iter()
                .map(|m| m.to_string().lines().map(String::from).collect())
                .collect();
            let height = blocks.iter().map(Vec::len).max().unwrap_or(0);
            for r in 0..height {
                let row: Vec<String> = blocks
                    .iter()
                    .map(|b| format!("{:width$}", b.get(r).map_or("", String::as_str), width = 5))
                    .collect();
                println!("    {}", row.join(" "));
            }
            println!();
        }
    }
    Ok(())
}
