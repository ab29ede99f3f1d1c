//! Weak entries, column merges, and the mergeable characterization.
//!
//! A weak entry is a 1 at the bottom of its column whose left neighbour
//! column has its topmost 1 in the same row.  Merging at a weak entry
//! clears it, pulls the ones above it onto the left column, and drops the
//! column; the matrix is mergeable when every merge, left to right, drops
//! nothing else.  The mergeable members are exactly the images of the
//! strict ascent sequences, so their counts follow the Fishburn numbers.

use wascent::matrices::{generate_wmat, omega, omega_inv, MergeOutcome};
use wascent::sequences::generate_ascent_sequences;
use wascent::WeakAscentSequence;

fn print_matrix(m: &wascent::BinaryMatrix) {
    for line in m.to_string().lines() {
        println!("    {line}");
    }
}

fn main() -> wascent::Result<()> {
    let a = omega_inv(&WeakAscentSequence::new(vec![0, 0, 2, 1, 1, 0, 1, 5])?);
    println!("matrix of (0, 0, 2, 1, 1, 0, 1, 5), weak entries {:?}:", a.weak_entries());
    print_matrix(&a);
    match a.merge_at(a.weak_entries()[0])? {
        MergeOutcome::Merged(_) => println!("merged cleanly"),
        MergeOutcome::NotMergeable => {
            println!("the merge collides with a 1, so this is no ascent-sequence image")
        }
    }
    assert!(!a.is_mergeable());

    let m = omega_inv(&WeakAscentSequence::new(vec![0, 1, 1, 2])?);
    println!("\nmatrix of the ascent sequence (0, 1, 1, 2), weak entries {:?}:", m.weak_entries());
    print_matrix(&m);
    if let MergeOutcome::Merged(next) = m.merge_at(m.weak_entries()[0])? {
        println!("merging drops only the weak entry:");
        print_matrix(&next);
        assert_eq!(omega(&next)?.entries(), [0, 1, 2]);
        println!("the result is the matrix of (0, 1, 2)");
    }
    assert!(m.is_mergeable());

    println!("\nmergeable members against ascent-sequence images:");
    for n in 1..=7 {
        let members = generate_wmat(n)?;
        let total = members.len();
        let mergeable: Vec<_> = members.into_iter().filter(|m| m.is_mergeable()).collect();
        let ascent = generate_ascent_sequences(n)?;
        assert_eq!(mergeable.len(), ascent.len());
        for m in &mergeable {
            assert!(omega(m)?.stats().is_ascent_sequence);
        }
        println!("    n={n}: {} mergeable of {}", mergeable.len(), total);
    }
    println!("the mergeable counts 1, 2, 5, 15, 53, 217, 1014 are the Fishburn numbers");
    Ok(())
}
