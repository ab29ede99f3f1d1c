//! Weak ascent sequences and the combinatorial structures they encode.
//!
//! The crate implements five families of objects, all counted by the same
//! sequence 1, 2, 6, 23, 106, 567, 3440, 23286, ...:
//!
//! * weak ascent sequences ([`sequences`]),
//! * permutations avoiding a bivincular pattern ([`permutations`]),
//! * upper-triangular binary matrices with a column adjacency condition
//!   ([`matrices`]),
//! * weakly (3+1)-free factorial posets ([`posets`]),
//! * inversion sequences avoiding the vincular pattern `(10)0`
//!   ([`inversions`]).
//!
//! Explicit bijections map each family to the weak ascent sequences, and
//! [`enumeration`] provides the counting recurrence, a truncated solver for
//! the generating function, and cross-family count checks.
//!
//! The `examples/` directory of this crate walks through each capability;
//! `cargo run --example bijection_walkthrough` is a good starting point.
//! A thin command line binary exposes the same operations for scripting;
//! see [`cli`].

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod inversions;
pub mod matrices;
pub mod permutations;
pub mod posets;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use inversions::{InversionSequence, VincularPattern};
pub use matrices::BinaryMatrix;
pub use permutations::Permutation;
pub use posets::FactorialPoset;
pub use sequences::WeakAscentSequence;
