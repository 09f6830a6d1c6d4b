//! Schubert expansion coefficients `a_w` of the permutahedral class `τ_n`,
//! computed several independent ways, together with the combinatorics they
//! rest on: Schubert polynomials, divided symmetrization, mixed Eulerian
//! numbers, Klyachko's algebra, pipe dreams and flagged tableaux.

pub mod aw;
pub mod error;
pub mod golden;
pub mod klyachko;
pub mod mixed_eulerian;
pub mod perm;
pub mod pipedreams;
pub mod poly;
pub mod series;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Permutation, ReducedWord, WeakComposition};
pub use poly::SparsePoly;
