//! One object in each family, tied together by the bijections.
//!
//! Starting from the weak ascent sequence (0,0,2,1,1,0,1,5), the example
//! computes its permutation, matrix, poset, and inversion-sequence forms,
//! then checks that every inverse map returns the starting object.

use wascent::inversions::{phi_map, phi_map_inverse};
use wascent::matrices::{omega, omega_inv};
use wascent::permutations::{gamma, gamma_inv};
use wascent::posets::{phi, psi};
use wascent::sequences::WeakAscentSequence;

fn main() -> wascent::Result<()> {
    let x = WeakAscentSequence::new(vec![0, 0, 2, 1, 1, 0, 1, 5])?;
    println!("weak ascent sequence   {x}");

    let p = gamma_inv(&x);
    println!("permutation            {p}");
    assert_eq!(gamma(&p)?, x);

    let m = omega_inv(&x);
    println!("matrix");
    for line in m.to_string().lines() {
        println!("    {line}");
    }
    assert_eq!(omega(&m)?, x);

    let q = psi(&m)?;
    println!("poset downset sizes    {q}");
    let relations: Vec<String> = q
        .relations()
        .iter()
        .map(|(a, b)| format!("{a}<{b}"))
        .collect();
    println!("poset relations        {}", relations.join(" "));
    assert_eq!(phi(&q), m);

    let e = phi_map_inverse(&x);
    println!("inversion sequence     {e}");
    assert_eq!(phi_map(&e)?, x);

    println!("every inverse map returned the starting sequence");
    Ok(())
}
