//! Randomized round trips through every bijection, at lengths beyond the
//! exhaustive suites.

use proptest::prelude::*;

use wascent::inversions::{phi_map, phi_map_inverse};
use wascent::matrices::{omega, omega_inv};
use wascent::permutations::{gamma, gamma_inv};
use wascent::posets::{phi, psi};
use wascent::{BinaryMatrix, FactorialPoset, InversionSequence, WeakAscentSequence};

/// A uniform pick at every step of the growth rule.
fn arb_weak_ascent() -> impl Strategy<Value = WeakAscentSequence> {
    proptest::collection::vec(any::<u32>(), 1..=24).prop_map(|picks| {
        let mut entries: Vec<usize> = Vec::with_capacity(picks.len());
        let mut wasc = 0usize;
        for pick in picks {
            let bound = if entries.is_empty() { 0 } else { 1 + wasc };
            let v = pick as usize % (bound + 1);
            if entries.last().is_some_and(|&prev| prev <= v) {
                wasc += 1;
            }
            entries.push(v);
        }
        WeakAscentSequence::new(entries).expect("grown within the bound")
    })
}

proptest! {
    #[test]
    fn gamma_round_trip(x in arb_weak_ascent()) {
        let p = gamma_inv(&x);
        prop_assert_eq!(gamma(&p).unwrap(), x);
    }

    #[test]
    fn omega_round_trip(x in arb_weak_ascent()) {
        let m = omega_inv(&x);
        prop_assert_eq!(omega(&m).unwrap(), x);
    }

    #[test]
    fn psi_inverts_phi(x in arb_weak_ascent()) {
        let m = omega_inv(&x);
        let p = psi(&m).unwrap();
        prop_assert_eq!(phi(&p), m);
        prop_assert_eq!(psi(&phi(&p)).unwrap(), p);
    }

    #[test]
    fn phi_map_round_trip(x in arb_weak_ascent()) {
        let e = phi_map_inverse(&x);
        prop_assert_eq!(phi_map(&e).unwrap(), x);
    }

    #[test]
    fn reduce_inverts_expand(x in arb_weak_ascent(), pick in any::<u32>()) {
        let m = omega_inv(&x);
        let label = pick as usize % (2 + x.wasc_count());
        let bigger = m.expand(label).unwrap();
        let (back, removed) = bigger.reduce().unwrap();
        prop_assert_eq!(back, m);
        prop_assert_eq!(removed, label);
    }

    #[test]
    fn json_round_trips(x in arb_weak_ascent()) {
        prop_assert_eq!(WeakAscentSequence::from_json(&x.to_json()).unwrap(), x.clone());
        let p = gamma_inv(&x);
        prop_assert_eq!(wascent::Permutation::from_json(&p.to_json()).unwrap(), p);
        let m = omega_inv(&x);
        prop_assert_eq!(BinaryMatrix::from_json(&m.to_json()).unwrap(), m.clone());
        let q = psi(&m).unwrap();
        prop_assert_eq!(FactorialPoset::from_json(&q.to_json()).unwrap(), q);
        let e = phi_map_inverse(&x);
        prop_assert_eq!(InversionSequence::from_json(&e.to_json()).unwrap(), e);
    }
}
