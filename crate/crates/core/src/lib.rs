//! Exact computations around minimal W-algebras: root data, characters,
//! conformal embeddings, a lattice vertex algebra engine, and OPE tables.

pub mod algebra;
pub mod embed;
pub mod lattice;
pub mod rational;
pub mod reps;
pub mod wmin;
