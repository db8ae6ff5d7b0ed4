//! Finite closure systems presented by implication bases.
//!
//! The crate computes closures and closed families, recognizes convex
//! geometries, derives quasi-closed and critical sets, canonical and optimum
//! bases, and minimum generators by exhaustive search. It also builds and
//! checks three reduction gadgets relating these problems to CNF
//! satisfiability and DNF tautology.

pub mod basis;
pub mod cli;
pub mod closure;
pub mod error;
pub mod formula;
pub mod geometry;
pub mod io;
pub mod limits;
pub mod model;
pub mod optimizer;
pub mod reductions;

pub use error::{Error, LiftViolation, Result};
pub use formula::{Assignment, CnfFormula, DnfFormula, Formula, Literal};
pub use limits::Limits;
pub use model::{basis_size, make_basis, ElementSet, GroundSet, Implication, ImplicationBasis};
