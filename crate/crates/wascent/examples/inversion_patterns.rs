//! Vincular patterns on inversion sequences and the encoding phi.
//!
//! Three pattern-restricted families share the weak ascent counting
//! sequence; each excludes exactly one length-4 inversion sequence.  The
//! map phi carries the (10)0-avoiders to weak ascent sequences and keeps
//! descent positions fixed.

use wascent::inversions::{
    generate_all, generate_avoiding, generate_posdt, pattern_100, pattern_101, phi_map,
    InversionSequence,
};

fn main() -> wascent::Result<()> {
    let p = pattern_100();
    let e = InversionSequence::new(vec![0, 1, 0, 2, 1, 3])?;
    println!("pattern {p} on {e}: contains = {}", e.contains(&p));
    let w = phi_map(&e)?;
    println!("phi({e}) = {w}");
    assert_eq!(e.descent_positions(), {
        let v = w.entries();
        (1..v.len()).filter(|&i| v[i - 1] > v[i]).map(|i| i + 1).collect()
    });
    println!("descent positions survive: {:?}", e.descent_positions());

    println!("\nthe unique length-4 exclusion of each family:");
    let all = generate_all(4)?;
    let families: [(&str, Vec<InversionSequence>); 3] = [
        ("(10)0 avoiders", generate_avoiding(4, &[pattern_100()])?),
        ("(10)1 avoiders", generate_avoiding(4, &[pattern_101()])?),
        ("descent-bottom avoiders", generate_posdt(4)?),
    ];
    for (name, members) in families {
        let missing: Vec<String> = all
            .iter()
            .filter(|e| !members.contains(e))
            .map(ToString::to_string)
            .collect();
        println!("    {name:<24} exclude {}", missing.join(", "));
        assert_eq!(missing.len(), 1);
    }

    println!("\ncounts by length:");
    for n in 1..=6 {
        let a = generate_avoiding(n, &[pattern_100()])?.len();
        let b = generate_avoiding(n, &[pattern_101()])?.len();
        let c = generate_posdt(n)?.len();
        assert_eq!(a, b);
        assert_eq!(b, c);
        println!("    n={n}: {a}");
    }
    Ok(())
}
