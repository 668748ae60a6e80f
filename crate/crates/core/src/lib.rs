//! Exact computations around the commuting scheme: Hecke-algebra centers,
//! coloured lattice paths, trigonometric shuffle algebras and symmetric functions.

pub mod commscheme;
pub mod error;
pub mod hecke;
pub mod kernel;
pub mod lattice;
pub mod perm;
pub mod shuffle;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
