//! Exact computations with K-theory Soergel bimodules.
//!
//! The representation ring `R = R(T)` of a maximal torus is modelled as a
//! ring of Laurent polynomials over the rationals, with exponents in the
//! weight lattice of a simply connected root datum. On top of it the crate
//! provides:
//!
//! - [`root_datum`]: Cartan matrices, positive roots and Weyl groups;
//! - [`laurent`]: exact arithmetic in `R` with Weyl group action;
//! - [`demazure`]: Demazure operators, induction and Weyl characters;
//! - [`frobenius`]: the extensions `R^s ⊂ R` and `R^W ⊂ R`, Casimir
//!   elements and the Steinberg basis;
//! - [`bimodule`]: Bott–Samelson bimodules with their right action and the
//!   Frobenius structure maps;
//! - [`homspace`]: predicted and computed ranks of Hom spaces between
//!   Bott–Samelson bimodules.
//!
//! Runnable walkthroughs live in the `examples/` directory of this crate.

pub mod bimodule;
pub mod cli;
pub mod demazure;
pub mod error;
pub mod frobenius;
pub mod homspace;
pub mod laurent;
pub mod matrix;
pub mod root_datum;

pub use error::Error;
pub use laurent::{LaurentPoly, SpecializationPoint};
pub use root_datum::{RootDatum, Weight, WeylElement, WeylGroup};
