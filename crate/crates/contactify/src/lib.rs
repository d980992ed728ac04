//! Exact pipeline from Lie algebra representation data to explicit Pfaffian
//! systems with prescribed simple symmetry algebras.
//!
//! The chain is: Clifford generator towers ([`clifford`]) produce spin
//! representations ([`repalg`]); an intertwiner `ω: Λ²S → R` is found by solving
//! the magical equation ([`magical`]); `ω` defines a 2-step graded nilpotent
//! algebra whose Tanaka prolongation is assembled in [`tanaka`]; the same `ω`
//! yields the contact forms of [`forms`], whose symmetries are independently
//! recovered by brute force in [`symmetry`]. [`presets`] wires it together for
//! the catalogued cases.

pub mod clifford;
pub mod exact;
pub mod forms;
pub mod magical;
pub mod pipeline;
pub mod presets;
pub mod repalg;
pub mod symmetry;
pub mod tables;
pub mod tanaka;
