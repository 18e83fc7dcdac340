//! Exact computations with cluster algebras and τ-tilting theory of type A.
//!
//! The cluster side covers seed mutation with principal coefficients,
//! g-vectors, F-polynomials, Newton polytopes, tropical F-invariants and
//! Bongartz completion. The module side works over path algebras of the
//! linearly oriented quiver `1 -> 2 -> ... -> n`.

pub mod bongartz;
pub mod cli;
pub mod error;
pub mod exmatrix;
pub mod harness;
pub mod invariant;
pub mod io;
pub mod pattern;
pub mod polyring;
pub mod polytope;
pub mod simplex;
pub mod tau;

pub use error::{Error, Result};
