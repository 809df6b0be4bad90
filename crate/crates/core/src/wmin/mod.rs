//! λ-bracket tables of the minimal W-algebras W^k(sl(n), θ) in their strong generators
//! J^a (a ∈ g♮), G^u (u ∈ g_{-1/2}) and ω, with a normally ordered expression calculus,
//! Sugawara vectors, and the map of the sl(4) table at k = -8/3 into the lattice realization.

mod ctx;
mod expr;
mod ope;
mod phi;
mod poly;

pub use ctx::{form, Mat, OpeContext};
pub use expr::{Atom, Expr, LExpr, Word};
pub use ope::{build_ope, central_charge, GenKind, Generator, OpeTable, PairCheck, PrimaryCheck};
pub use phi::{level as phi_level, verify_phi, Image, Phi, PhiReport, Sqrt2State};
pub use poly::{parse_poly, parse_ratfn, Poly, RatFn};

/// The reference sl(4) table: the ten G-G pairs and the J-sector.
pub const SL4_TABLE: &str = include_str!("../../fixtures/sl4_ope.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WminError {
    #[error("sl(n) tables need n >= 3, got n = {0}")]
    Rank(usize),
    #[error("k = {0} is critical")]
    Critical(String),
    #[error("the map into the lattice realization needs sl(4) at k = -8/3")]
    PhiLevel,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
